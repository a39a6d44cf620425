"""Exact arithmetic in finite fields F_{p^m} with deterministic construction.

Representation
--------------
An element with coefficient vector (c_0, ..., c_{m-1}) over F_p (c_i the
coefficient of the i-th power of the generator) is stored as the packed
integer code sum(c_i * p**i).  Codes 0..p-1 are therefore exactly the prime
subfield and code p is the residue class of x modulo the field's modulus.

Construction is deterministic: ``make_field(p, m)`` always picks the
canonically-first monic irreducible modulus of degree m (coefficient vectors
enumerated with the constant term varying fastest) and the canonically-first
primitive element, so identical parameters yield identical tables on every
run.  Discrete exp/log tables are built for orders up to ``TABLE_CAP``, which
makes multiplication, inversion and powering O(1); larger fields fall back to
polynomial arithmetic modulo the modulus.

Extension towers F_q inside F_{q^n} are realized inside the single context of
order q^n; membership in the intermediate field F_{q^d} is decided by the
Frobenius fixed-point test, and ``subfield_embedding`` provides the canonical
injection of a standalone small field when values must cross contexts.
"""

from __future__ import annotations

import itertools

from . import numtheory
from .errors import (
    BadSubfieldError,
    BadTowerError,
    CtxMismatchError,
    NotPrimeError,
    SizeCapError,
    WeightRangeError,
)

# exp/log tables are built at or below this order; above it, multiplication
# falls back to polynomial arithmetic
TABLE_CAP = 1 << 20

# full addition tables (odd characteristic only) at or below this order
ADD_TABLE_CAP = 1 << 10

# hard refusal bound for field construction
FIELD_ORDER_CAP = 1 << 22

_FIELD_CACHE: dict[tuple[int, int], "FieldCtx"] = {}
_EMBED_CACHE: dict[tuple[int, int, int], "Embedding"] = {}


class FieldCtx:
    """A concrete finite field F_{p^m}.

    Immutable after construction; instances are shared via ``make_field`` and
    safe for concurrent reads.  All arithmetic methods operate on integer
    codes (see module docstring); the ``FieldElement`` wrapper provides the
    operator interface on top of them.
    """

    __slots__ = ("p", "m", "order", "modulus", "zeta_code", "exp", "log",
                 "_add_table", "_digit_table", "_wide_table", "_mod_int",
                 "_mfac")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.order = p ** m
        self.modulus = tuple(modulus)
        self.zeta_code = None
        self.exp = None
        self.log = None
        self._add_table = None
        self._digit_table = None
        self._wide_table = None
        self._mfac = None
        # bitmask form of the modulus, used by the carry-less p=2 fast path
        self._mod_int = None
        if p == 2:
            self._mod_int = sum(c << i for i, c in enumerate(modulus))

    # ------------------------------------------------------------------
    # code <-> coefficient vector

    def digits_of(self, code: int) -> tuple[int, ...]:
        """Coefficient vector of a code, length m, base-p little-endian."""
        t = self._digit_table
        if t is not None:
            return t[code]
        p = self.p
        out = []
        for _ in range(self.m):
            code, r = divmod(code, p)
            out.append(r)
        return tuple(out)

    def code_of(self, coeffs) -> int:
        p = self.p
        code = 0
        for c in reversed(list(coeffs)):
            code = code * p + c % p
        return code

    # ------------------------------------------------------------------
    # code-level arithmetic

    def add_codes(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        t = self._add_table
        if t is not None:
            return t[a][b]
        s, shift = 0, 1
        while a or b:
            s += ((a % p) + (b % p)) % p * shift
            a //= p
            b //= p
            shift *= p
        return s

    def neg_code(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.m == 1:
            return (-a) % p
        s, shift = 0, 1
        while a:
            d = a % p
            if d:
                s += (p - d) * shift
            a //= p
            shift *= p
        return s

    def sub_codes(self, a: int, b: int) -> int:
        return self.add_codes(a, self.neg_code(b))

    def mul_codes(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.exp is not None:
            return self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]
        return self._polymul(a, b)

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in %r" % self)
        M = self.order - 1
        if self.exp is not None:
            return self.exp[(M - self.log[a]) % M]
        return self._pow_slow(a, M - 1)

    def pow_code(self, a: int, e: int) -> int:
        M = self.order - 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        e %= M
        if self.log is not None:
            return self.exp[(self.log[a] * e) % M]
        return self._pow_slow(a, e)

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._polymul(r, a)
            a = self._polymul(a, a)
            e >>= 1
        return r

    def _polymul(self, a: int, b: int) -> int:
        """Product of two codes by polynomial multiplication mod the modulus."""
        p, m = self.p, self.m
        if m == 1:
            return (a * b) % p
        if p == 2:
            mod, top = self._mod_int, 1 << m
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= mod
            return r & (top - 1)
        da = self.digits_of(a)
        db = self.digits_of(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        # reduce: x^m == -(modulus minus leading term)
        low = self.modulus[:-1]
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i] % p
            if c:
                for j, mj in enumerate(low):
                    if mj:
                        prod[i - m + j] -= c * mj
            prod[i] = 0
        return self.code_of(c % p for c in prod[:m])

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero code."""
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        M = self.order - 1
        if self._mfac is None:
            self._mfac = tuple(numtheory.prime_factors(M)) if M > 1 else ()
        ord_ = M
        for t in self._mfac:
            while ord_ % t == 0 and self.pow_code(a, ord_ // t) == 1:
                ord_ //= t
        return ord_

    # ------------------------------------------------------------------
    # element construction

    def element(self, code: int) -> "FieldElement":
        """Element from its integer code (0 <= code < order)."""
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} out of range for {self!r}")
        return FieldElement(self, code)

    def from_coeffs(self, coeffs) -> "FieldElement":
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise ValueError("coefficient vector longer than extension degree")
        return FieldElement(self, self.code_of(coeffs))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        """All field elements in ascending code order."""
        for code in range(self.order):
            yield FieldElement(self, code)

    def nth_root_of_unity(self, N: int) -> "FieldElement":
        """The canonical root of unity of exact order N, i.e. zeta**((order-1)/N)."""
        from .errors import NotDivisorError

        M = self.order - 1
        if N < 1 or M % N:
            raise NotDivisorError(f"{N} does not divide {M}")
        return FieldElement(self, self.pow_code(self.zeta_code, M // N))

    # ------------------------------------------------------------------
    # lazy per-context tables

    def wide_codes(self) -> list[int]:
        """Codes re-packed with 16-bit digit slots, for carry-deferred sums."""
        if self._wide_table is None:
            p, m = self.p, self.m
            table = []
            for code in range(self.order):
                v, w = code, 0
                for i in range(m):
                    v, r = divmod(v, p)
                    w |= r << (16 * i)
                table.append(w)
            self._wide_table = table
        return self._wide_table

    def narrow_code(self, wide: int) -> int:
        """Inverse of the wide packing, reducing each 16-bit slot mod p."""
        p = self.p
        code = 0
        for i in reversed(range(self.m)):
            code = code * p + ((wide >> (16 * i)) & 0xFFFF) % p
        return code

    # ------------------------------------------------------------------

    def _finish(self):
        """Find the canonical primitive element and build lookup tables."""
        M = self.order - 1
        fac = numtheory.prime_factors(M) if M > 1 else []
        for code in range(1, self.order):
            if all(self._pow_slow(code, M // t) != 1 for t in fac):
                self.zeta_code = code
                break
        if self.order <= TABLE_CAP:
            exp = [0] * max(M, 1)
            e = 1
            for i in range(M):
                exp[i] = e
                e = self._polymul(e, self.zeta_code)
            if e != 1:  # zeta**(order-1) must close the cycle
                raise AssertionError("generator order inconsistency")
            log = [-1] * self.order
            for i, c in enumerate(exp):
                log[c] = i
            self.exp = exp
            self.log = log
        if self.p != 2 and self.m > 1 and self.order <= TABLE_CAP:
            self._digit_table = tuple(self._raw_digits(c) for c in range(self.order))
        if self.p != 2 and self.m > 1 and self.order <= ADD_TABLE_CAP:
            p = self.p
            digs = self._digit_table
            table = []
            for a in range(self.order):
                da = digs[a]
                row = []
                for b in range(self.order):
                    db = digs[b]
                    row.append(self.code_of((x + y) % p for x, y in zip(da, db)))
                table.append(row)
            self._add_table = table

    def _raw_digits(self, code: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.m):
            code, r = divmod(code, p)
            out.append(r)
        return tuple(out)

    def __repr__(self):
        return f"FieldCtx(p={self.p}, m={self.m})"


class FieldElement:
    """An element of a FieldCtx: immutable (ctx, code) pair with operators.

    Plain ints mixed into arithmetic are coerced to prime-subfield constants
    (reduced mod p), which is the usual convention for scalars.
    """

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.digits_of(self.code)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise CtxMismatchError("elements from different fields")
            return other.code
        if isinstance(other, int):
            return other % self.ctx.p
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.add_codes(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.sub_codes(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.sub_codes(c, self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.mul_codes(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.mul_codes(self.code, self.ctx.inv_code(c)))

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.mul_codes(c, self.ctx.inv_code(self.code)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg_code(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow_code(self.code, e))

    def __eq__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self.code == c

    def __hash__(self):
        return hash((id(self.ctx), self.code))

    def __bool__(self):
        return self.code != 0

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.inv_code(self.code))

    def multiplicative_order(self) -> int:
        return self.ctx.order_of(self.code)

    def in_subfield(self, q: int) -> bool:
        """Frobenius fixed-point test for membership in the order-q subfield."""
        return self.ctx.pow_code(self.code, q) == self.code

    def __repr__(self):
        return f"F{self.ctx.order}({self.code})"


class PolyFq:
    """Polynomial over one FieldCtx, little-endian code tuple, no leading zeros."""

    __slots__ = ("ctx", "codes")

    def __init__(self, ctx: FieldCtx, codes):
        codes = list(codes)
        if any(not 0 <= c < ctx.order for c in codes):
            raise ValueError(f"coefficient code out of range for F_{ctx.order}")
        while codes and codes[-1] == 0:
            codes.pop()
        self.ctx = ctx
        self.codes = tuple(codes)

    @classmethod
    def from_elements(cls, elements) -> "PolyFq":
        elements = list(elements)
        if not elements:
            raise ValueError("empty coefficient list has no context")
        ctx = elements[0].ctx
        return cls(ctx, [e.code for e in elements])

    @classmethod
    def x(cls, ctx: FieldCtx) -> "PolyFq":
        return cls(ctx, (0, 1))

    @classmethod
    def constant(cls, ctx: FieldCtx, code: int) -> "PolyFq":
        return cls(ctx, (code,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.codes) - 1

    def is_zero(self) -> bool:
        return not self.codes

    @property
    def is_monic(self) -> bool:
        return bool(self.codes) and self.codes[-1] == 1

    def coefficient(self, i: int) -> FieldElement:
        code = self.codes[i] if 0 <= i < len(self.codes) else 0
        return FieldElement(self.ctx, code)

    def __getitem__(self, i: int) -> FieldElement:
        return self.coefficient(i)

    def _check(self, other):
        if not isinstance(other, PolyFq):
            raise TypeError("expected a polynomial")
        if other.ctx is not self.ctx:
            raise CtxMismatchError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        ctx = self.ctx
        a, b = self.codes, other.codes
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add_codes(out[i], c)
        return PolyFq(ctx, out)

    def __sub__(self, other):
        self._check(other)
        ctx = self.ctx
        out = list(self.codes) + [0] * max(0, len(other.codes) - len(self.codes))
        for i, c in enumerate(other.codes):
            out[i] = ctx.sub_codes(out[i], c)
        return PolyFq(ctx, out)

    def __neg__(self):
        ctx = self.ctx
        return PolyFq(ctx, [ctx.neg_code(c) for c in self.codes])

    def __mul__(self, other):
        self._check(other)
        ctx = self.ctx
        a, b = self.codes, other.codes
        if not a or not b:
            return PolyFq(ctx, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = ctx.add_codes(out[i + j], ctx.mul_codes(x, y))
        return PolyFq(ctx, out)

    def scale(self, code: int) -> "PolyFq":
        ctx = self.ctx
        return PolyFq(ctx, [ctx.mul_codes(c, code) for c in self.codes])

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.ctx
        rem = list(self.codes)
        d = other.degree
        lead_inv = ctx.inv_code(other.codes[-1])
        quot = [0] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                f = ctx.mul_codes(c, lead_inv)
                quot[i - d] = f
                for j, oc in enumerate(other.codes):
                    if oc:
                        rem[i - d + j] = ctx.sub_codes(rem[i - d + j], ctx.mul_codes(f, oc))
        return PolyFq(ctx, quot), PolyFq(ctx, rem[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "PolyFq":
        if self.is_zero() or self.codes[-1] == 1:
            return self
        return self.scale(self.ctx.inv_code(self.codes[-1]))

    def derivative(self) -> "PolyFq":
        ctx = self.ctx
        out = []
        for i in range(1, len(self.codes)):
            out.append(ctx.mul_codes(self.codes[i], i % ctx.p))
        return PolyFq(ctx, out)

    def pow_mod(self, e: int, modpoly: "PolyFq") -> "PolyFq":
        """self**e reduced mod modpoly, by square and multiply."""
        if e < 0:
            raise ValueError("negative exponent")
        result = PolyFq(self.ctx, (1,))
        base = self % modpoly
        while e:
            if e & 1:
                result = (result * base) % modpoly
            base = (base * base) % modpoly
            e >>= 1
        return result

    def __call__(self, point: FieldElement) -> FieldElement:
        """Evaluate by Horner's rule at a point of the same context."""
        if point.ctx is not self.ctx:
            raise CtxMismatchError("evaluation point from a different field")
        ctx = self.ctx
        acc = 0
        for c in reversed(self.codes):
            acc = ctx.add_codes(ctx.mul_codes(acc, point.code), c)
        return FieldElement(ctx, acc)

    def map_codes(self, fn) -> "PolyFq":
        return PolyFq(self.ctx, [fn(c) for c in self.codes])

    def __eq__(self, other):
        if not isinstance(other, PolyFq):
            return NotImplemented
        return self.ctx is other.ctx and self.codes == other.codes

    def __hash__(self):
        return hash((id(self.ctx), self.codes))

    def __str__(self):
        if not self.codes:
            return "0"
        terms = []
        for i in range(len(self.codes) - 1, -1, -1):
            c = self.codes[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(terms)

    def __repr__(self):
        return f"PolyFq(F{self.ctx.order}, {self})"


def poly_gcd(a: PolyFq, b: PolyFq) -> PolyFq:
    """Monic gcd of two polynomials over the same field."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# ----------------------------------------------------------------------
# field construction


def make_field(p: int, m: int = 1) -> FieldCtx:
    """Deterministically construct (and cache) the field F_{p^m}.

    The modulus is the canonically-first monic irreducible of degree m over
    F_p; the stored generator is the canonically-first primitive element.
    """
    key = (p, m)
    ctx = _FIELD_CACHE.get(key)
    if ctx is not None:
        return ctx
    if not isinstance(m, int) or m < 1:
        raise ValueError("extension degree must be a positive integer")
    if not numtheory.is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p ** m > FIELD_ORDER_CAP:
        raise SizeCapError(f"field order {p}**{m} exceeds cap {FIELD_ORDER_CAP}")
    if m == 1:
        modulus = (0, 1)  # the class of x; unused for prime fields
    else:
        from .spectral import oracle_irreducible

        prime = make_field(p, 1)
        modulus = None
        for code in itertools.count(0):
            digits = []
            c = code
            for _ in range(m):
                c, r = divmod(c, p)
                digits.append(r)
            if c:  # exhausted all monic candidates without a hit: impossible
                raise AssertionError("no irreducible modulus found")
            cand_poly = PolyFq(prime, digits + [1])
            if oracle_irreducible(cand_poly):
                modulus = tuple(digits + [1])
                break
    ctx = FieldCtx(p, m, modulus)
    ctx._finish()
    _FIELD_CACHE[key] = ctx
    return ctx


def primitive_element(ctx: FieldCtx) -> FieldElement:
    """The canonically-first generator of the multiplicative group."""
    return FieldElement(ctx, ctx.zeta_code)


def _check_tower(ctx: FieldCtx, q: int, n: int):
    if n < 1 or q < 2 or q ** n != ctx.order:
        raise BadTowerError(f"q**n = {q}**{n} does not match field order {ctx.order}")


def element_degree(xi: FieldElement, q: int, n: int) -> int:
    """Degree of xi over F_q inside F_{q^n}: smallest d | n with xi in F_{q^d}.

    The zero element lies in every subfield, so it reports degree 1.
    """
    ctx = xi.ctx
    _check_tower(ctx, q, n)
    if xi.code == 0:
        return 1
    for d in numtheory.divisors(n):
        if ctx.pow_code(xi.code, q ** d) == xi.code:
            return d
    raise AssertionError("unreachable: d == n always satisfies the fixed-point test")


def char_poly(xi: FieldElement, q: int, n: int) -> PolyFq:
    """Monic degree-n polynomial over F_q whose roots are the Frobenius orbit of xi.

    Computed as the product of (x - xi**(q**k)) for k = 0..n-1; equals the
    minimal polynomial of xi raised to the power n / deg(xi).  Coefficients
    provably lie in the F_q-subfield of the ambient context.
    """
    ctx = xi.ctx
    _check_tower(ctx, q, n)
    conj = []
    e = 1
    for _ in range(n):
        conj.append(ctx.pow_code(xi.code, e))
        e *= q
    cur = [1]
    for c in conj:
        nc = ctx.neg_code(c)
        new = [0] * (len(cur) + 1)
        for i, a in enumerate(cur):
            if a:
                new[i + 1] = ctx.add_codes(new[i + 1], a)
                new[i] = ctx.add_codes(new[i], ctx.mul_codes(nc, a))
        cur = new
    for a in cur:
        if ctx.pow_code(a, q) != a:
            raise AssertionError("characteristic polynomial left the base field")
    return PolyFq(ctx, cur)


def sigma_eval(w: int, xi: FieldElement, q: int, n: int) -> FieldElement:
    """Value of the w-th characteristic elementary symmetric polynomial at xi.

    Equals (-1)**w times the coefficient of x**(n-w) in char_poly(xi); w = 0
    gives 1, w = 1 the trace and w = n the norm.
    """
    if not 0 <= w <= n:
        raise WeightRangeError(f"w={w} outside [0, {n}]")
    cp = char_poly(xi, q, n)
    code = cp.codes[n - w] if n - w < len(cp.codes) else 0
    if w % 2:
        code = xi.ctx.neg_code(code)
    return FieldElement(xi.ctx, code)


# ----------------------------------------------------------------------
# canonical subfield injection


class Embedding:
    """Canonical field injection of a standalone F_{p^s} into F_{p^{s*t}}.

    Determined by mapping the small field's generator-of-representation x to
    the smallest-code root of the small modulus inside the big field; this is
    a genuine ring homomorphism and is deterministic.
    """

    __slots__ = ("small", "big", "gamma", "_lift", "_lower")

    def __init__(self, small: FieldCtx, big: FieldCtx):
        if small.p != big.p or big.m % small.m:
            raise BadTowerError(
                f"F_{small.order} is not a subfield of F_{big.order}")
        self.small = small
        self.big = big
        gamma = None
        mod_poly = PolyFq(big, small.modulus)  # coefficients are constants
        for code in range(big.order):
            if mod_poly(FieldElement(big, code)).code == 0:
                gamma = code
                break
        self.gamma = gamma
        lift = []
        for code in range(small.order):
            acc = 0
            for d in reversed(small.digits_of(code)):
                acc = big.add_codes(big.mul_codes(acc, gamma), d)
            lift.append(acc)
        self._lift = lift
        self._lower = {b: s for s, b in enumerate(lift)}

    def lift(self, elt: FieldElement) -> FieldElement:
        if elt.ctx is not self.small:
            raise CtxMismatchError("element not in the embedding's source field")
        return FieldElement(self.big, self._lift[elt.code])

    def lower(self, elt: FieldElement) -> FieldElement:
        if elt.ctx is not self.big:
            raise CtxMismatchError("element not in the embedding's target field")
        code = self._lower.get(elt.code)
        if code is None:
            raise BadSubfieldError(
                f"code {elt.code} is not in the embedded F_{self.small.order}")
        return FieldElement(self.small, code)

    def lift_poly(self, poly: PolyFq) -> PolyFq:
        if poly.ctx is not self.small:
            raise CtxMismatchError("polynomial not over the source field")
        lift = self._lift
        return PolyFq(self.big, [lift[c] for c in poly.codes])

    def lower_poly(self, poly: PolyFq) -> PolyFq:
        if poly.ctx is not self.big:
            raise CtxMismatchError("polynomial not over the target field")
        lower = self._lower
        try:
            return PolyFq(self.small, [lower[c] for c in poly.codes])
        except KeyError as exc:
            raise BadSubfieldError("coefficient outside the embedded subfield") from exc


def subfield_embedding(small: FieldCtx, big: FieldCtx) -> Embedding:
    """Cached canonical embedding of `small` into `big` (same characteristic)."""
    key = (small.p, small.m, big.m)
    emb = _EMBED_CACHE.get(key)
    if emb is None or emb.small is not small or emb.big is not big:
        emb = Embedding(small, big)
        _EMBED_CACHE[key] = emb
    return emb
