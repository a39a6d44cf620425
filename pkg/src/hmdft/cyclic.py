"""Functions Z_N -> F with exact DFT, convolution and least-period machinery.

The transform based on a root of unity zeta of exact order N sends f to
g(i) = sum_j f(j) * zeta**(i*j); its inverse is N**(-1) times the transform
based on zeta**(-1).  Convolution is the cyclic sum
(f (*) g)(i) = sum_{j+k=i} f(j) g(k), and the least period of f is the
smallest positive r with f(i + r) = f(i) for all i (always a divisor of N).

Everything is exact: values are finite-field elements, never floats.
Convolution iterates over support pairs, which reduces to the defining
double sum when both supports are dense but is far cheaper on the sparse
indicator functions this package mostly convolves.  Functions are immutable
once built; all operations here are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import numtheory
from .errors import (
    BadPermutationError,
    CtxMismatchError,
    ModulusMismatchError,
    NotDivisorError,
    OrderMismatchError,
)
from .gf import FieldCtx, FieldElement


@dataclass(frozen=True)
class SupportSet:
    """Sorted, duplicate-free subset of Z_N (canonical representatives)."""

    N: int
    members: tuple[int, ...]

    def __post_init__(self):
        ms = tuple(sorted(set(m % self.N for m in self.members)))
        object.__setattr__(self, "members", ms)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


class CyclicFn:
    """Dense function Z_N -> F, stored as a tuple of N value codes."""

    __slots__ = ("ctx", "N", "codes", "_supp")

    def __init__(self, ctx: FieldCtx, codes):
        codes = tuple(codes)
        if not codes:
            raise ValueError("modulus N must be at least 1")
        self.ctx = ctx
        self.N = len(codes)
        self.codes = codes
        self._supp = None

    @classmethod
    def from_elements(cls, elements) -> "CyclicFn":
        elements = list(elements)
        if not elements:
            raise ValueError("modulus N must be at least 1")
        ctx = elements[0].ctx
        for e in elements:
            if e.ctx is not ctx:
                raise CtxMismatchError("mixed field contexts in one function")
        return cls(ctx, [e.code for e in elements])

    @classmethod
    def from_support(cls, ctx: FieldCtx, N: int, members, value: int = 1) -> "CyclicFn":
        codes = [0] * N
        for m in members:
            codes[m % N] = value
        return cls(ctx, codes)

    @property
    def values(self) -> tuple[FieldElement, ...]:
        ctx = self.ctx
        return tuple(FieldElement(ctx, c) for c in self.codes)

    def __call__(self, i: int) -> FieldElement:
        return FieldElement(self.ctx, self.codes[i % self.N])

    def support(self) -> SupportSet:
        if self._supp is None:
            self._supp = SupportSet(self.N, tuple(i for i, c in enumerate(self.codes) if c))
        return self._supp

    def __eq__(self, other):
        if not isinstance(other, CyclicFn):
            return NotImplemented
        return self.ctx is other.ctx and self.codes == other.codes

    def __hash__(self):
        return hash((id(self.ctx), self.codes))

    def __add__(self, other):
        _check_pair(self, other)
        add = self.ctx.add_codes
        return CyclicFn(self.ctx, [add(a, b) for a, b in zip(self.codes, other.codes)])

    def __sub__(self, other):
        _check_pair(self, other)
        sub = self.ctx.sub_codes
        return CyclicFn(self.ctx, [sub(a, b) for a, b in zip(self.codes, other.codes)])

    def __neg__(self):
        neg = self.ctx.neg_code
        return CyclicFn(self.ctx, [neg(c) for c in self.codes])

    def scale(self, code: int) -> "CyclicFn":
        mul = self.ctx.mul_codes
        return CyclicFn(self.ctx, [mul(code, c) for c in self.codes])

    def __repr__(self):
        return f"CyclicFn(N={self.N}, F{self.ctx.order})"


def kronecker(ctx: FieldCtx, N: int) -> CyclicFn:
    """The convolution identity: 1 at index 0, else 0."""
    return CyclicFn(ctx, [1] + [0] * (N - 1))


def _check_pair(f: CyclicFn, g: CyclicFn):
    if f.N != g.N:
        raise ModulusMismatchError(f"moduli differ: {f.N} vs {g.N}")
    if f.ctx is not g.ctx:
        raise CtxMismatchError("functions valued in different fields")


def _check_root(f: CyclicFn, zeta: FieldElement) -> None:
    ctx, N = f.ctx, f.N
    if zeta.ctx is not ctx:
        raise CtxMismatchError("root of unity from a different field")
    if (ctx.order - 1) % N:
        raise NotDivisorError(f"N={N} does not divide {ctx.order - 1}")
    if zeta.code == 0 or ctx.order_of(zeta.code) != N:
        raise OrderMismatchError(f"supplied root does not have exact order {N}")


def dft(f: CyclicFn, zeta: FieldElement) -> CyclicFn:
    """Transform g(i) = sum_j f(j) * zeta**(i*j), exact over f's field."""
    _check_root(f, zeta)
    ctx, N = f.ctx, f.N
    mul = ctx.mul_codes
    zp = [1] * N
    acc = 1
    for t in range(1, N):
        acc = mul(acc, zeta.code)
        zp[t] = acc
    supp = [(j, c) for j, c in enumerate(f.codes) if c]
    out = [0] * N
    if ctx.p == 2:
        for i in range(N):
            s = 0
            for j, c in supp:
                s ^= mul(c, zp[i * j % N])
            out[i] = s
    elif ctx.m > 1 and len(supp) * (ctx.p - 1) < (1 << 16) and ctx.exp is not None:
        # carry-deferred accumulation in 16-bit digit slots
        wide = ctx.wide_codes()
        narrow = ctx.narrow_code
        for i in range(N):
            s = 0
            for j, c in supp:
                s += wide[mul(c, zp[i * j % N])]
            out[i] = narrow(s)
    else:
        add = ctx.add_codes
        for i in range(N):
            s = 0
            for j, c in supp:
                s = add(s, mul(c, zp[i * j % N]))
            out[i] = s
    return CyclicFn(ctx, out)


def idft(f: CyclicFn, zeta: FieldElement) -> CyclicFn:
    """Inverse transform: N**(-1) times the transform based on zeta**(-1)."""
    _check_root(f, zeta)
    ctx = f.ctx
    zinv = FieldElement(ctx, ctx.inv_code(zeta.code))
    g = dft(f, zinv)
    # N is invertible since N | order-1 forces gcd(N, p) = 1; N acts as the
    # prime-subfield constant N mod p
    ninv = pow(f.N % ctx.p, ctx.p - 2, ctx.p)
    return g.scale(ninv)


def pointwise_mul(f: CyclicFn, g: CyclicFn) -> CyclicFn:
    _check_pair(f, g)
    mul = f.ctx.mul_codes
    return CyclicFn(f.ctx, [mul(a, b) for a, b in zip(f.codes, g.codes)])


def convolve(f: CyclicFn, g: CyclicFn) -> CyclicFn:
    """Cyclic convolution; iterates support pairs, result equals the double sum."""
    _check_pair(f, g)
    ctx, N = f.ctx, f.N
    sf = [(j, c) for j, c in enumerate(f.codes) if c]
    sg = [(j, c) for j, c in enumerate(g.codes) if c]
    if len(sf) > len(sg):
        sf, sg = sg, sf
    add, mul = ctx.add_codes, ctx.mul_codes
    out = [0] * N
    for j, cj in sf:
        for k, ck in sg:
            i = j + k
            if i >= N:
                i -= N
            out[i] = add(out[i], mul(cj, ck))
    return CyclicFn(ctx, out)


def conv_power(f: CyclicFn, m: int) -> CyclicFn:
    """m-th convolution power, with f**(*0) the Kronecker delta."""
    if m < 0:
        raise ValueError("convolution power needs m >= 0")
    result = kronecker(f.ctx, f.N)
    base = f
    while m:
        if m & 1:
            result = convolve(result, base)
        m >>= 1
        if m:
            base = convolve(base, base)
    return result


def least_period_of_sequence(vals) -> int:
    """Least period of an arbitrary cyclic sequence, by ascending divisor scan."""
    vals = list(vals)
    N = len(vals)
    for d in numtheory.divisors(N):
        if d == N:
            return N
        ok = True
        for i in range(N - d):
            if vals[i] != vals[i + d]:
                ok = False
                break
        if ok:
            return d
    return N


def least_period(f: CyclicFn) -> int:
    """Smallest positive r with f(i + r) = f(i) for all i; always divides N."""
    return least_period_of_sequence(f.codes)


def is_periodic(f: CyclicFn, r: int) -> bool:
    """Whether f(i + r) = f(i) for all i (r need not divide N)."""
    N = f.N
    codes = f.codes
    return all(codes[i] == codes[(i + r) % N] for i in range(N))


def dft_period_by_support(s: SupportSet) -> int:
    """Least period of the transform of any f with supp(f) = s: N / gcd(N, s).

    The zero function (empty support) transforms to zero, least period 1.
    """
    if not s.members:
        return 1
    g = s.N
    for m in s.members:
        g = gcd(g, m)
    return s.N // g


def shift(f: CyclicFn, k: int) -> CyclicFn:
    """The k-shift f_k(i) = f(i + k); preserves the least period."""
    N = f.N
    codes = f.codes
    return CyclicFn(f.ctx, [codes[(i + k) % N] for i in range(N)])


def reversal(f: CyclicFn) -> CyclicFn:
    """The reversal f*(i) = f(-(1 + i)); an involution preserving the period."""
    return CyclicFn(f.ctx, tuple(reversed(f.codes)))


def compose_perm(f: CyclicFn, sigma) -> CyclicFn:
    """Apply a permutation of the value field to every value of f.

    `sigma` may be a dict (codes or elements) or a callable on elements; it
    must be a bijection of the whole value field.
    """
    ctx = f.ctx
    table = [None] * ctx.order
    if isinstance(sigma, dict):
        for k, v in sigma.items():
            kc = k.code if isinstance(k, FieldElement) else k
            vc = v.code if isinstance(v, FieldElement) else v
            if not (0 <= kc < ctx.order and 0 <= vc < ctx.order):
                raise BadPermutationError("mapping outside the value field")
            table[kc] = vc
    elif callable(sigma):
        for code in range(ctx.order):
            out = sigma(FieldElement(ctx, code))
            if not isinstance(out, FieldElement) or out.ctx is not ctx:
                raise BadPermutationError("callable must map the field to itself")
            table[code] = out.code
    else:
        raise BadPermutationError("sigma must be a dict or a callable")
    if None in table or len(set(table)) != ctx.order:
        raise BadPermutationError("sigma is not a bijection of the value field")
    return CyclicFn(ctx, [table[c] for c in f.codes])
