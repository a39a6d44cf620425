"""Decision procedures tying least periods to degree-n irreducible factors.

The central construction: for h over F_q and a subfield L of F_{q^n}
containing the image h(F_{q^n}^x), the reduced polynomial

    S(x) = (1 - h(x)**(#L - 1)) mod (x**(q**n - 1) - 1)

acts on F_{q^n}^x as the indicator of h's roots.  If the cyclic sequence of
S's coefficients has least period r not dividing (q**n - 1)/Phi_n(q), then h
has an irreducible factor of degree n; applied to h of degree n itself this
proves h irreducible.

Every test here returns a two-valued Verdict: "Proven" when the sufficient
condition held, "Inconclusive" otherwise.  Inconclusive never asserts a
negative; the conditions are one-directional and their converses genuinely
fail (see the regression tests for explicit witnesses).

Independent oracles (`oracle_irreducible` by the Frobenius-power test,
`oracle_factor_degrees` by squarefree decomposition plus distinct-degree
splitting) validate every Proven verdict in the test suite; they share no
code path with the period route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import numtheory
from .cyclic import CyclicFn, SupportSet, conv_power, dft_period_by_support, \
    kronecker, least_period
from .cyclo import threshold
from .errors import (
    BadSubfieldError,
    CtxMismatchError,
    DegreeMismatchError,
    SizeCapError,
    ZeroPolynomialError,
)
from .gf import (
    FieldElement,
    PolyFq,
    element_degree,
    make_field,
    poly_gcd,
    primitive_element,
    subfield_embedding,
)

PROVEN = "Proven"
INCONCLUSIVE = "Inconclusive"

MODULUS_GUARD = 1 << 22


@dataclass(frozen=True)
class Verdict:
    """Outcome of a one-directional sufficiency test, with its evidence."""

    status: str
    least_period: int | None = None
    threshold: int | None = None
    modulus: int | None = None
    divisor_pair: tuple[int, int] | None = None
    note: str = ""

    @property
    def proven(self) -> bool:
        return self.status == PROVEN


@dataclass(frozen=True)
class RootIndicator:
    """The reduced power S(x) for a base polynomial, with its coefficient sequence."""

    base: PolyFq
    subfield_order: int
    poly: PolyFq
    coeff_seq: CyclicFn


@dataclass(frozen=True)
class SupportDegreeReport:
    """Support-level periods versus degree-n / primitive membership.

    `sufficient` is Proven when the least period certifies a degree-n element
    in the support.  `necessary_holds` reports whether r divides no q**d - 1
    for proper d | n (which any support containing a degree-n element must
    satisfy).  `max_period` reports r = q**n - 1 (which any support containing
    a primitive element must produce).  Neither boolean is a sufficiency claim.
    """

    least_period: int
    threshold: int
    sufficient: Verdict
    necessary_holds: bool
    max_period: bool


def _fold_cyclic(h: PolyFq, N: int) -> CyclicFn:
    codes = [0] * N
    ctx = h.ctx
    for i, c in enumerate(h.codes):
        if c:
            codes[i % N] = ctx.add_codes(codes[i % N], c)
    return CyclicFn(ctx, codes)


def build_root_indicator(h: PolyFq, q: int, n: int,
                         subfield_order: int | None = None) -> RootIndicator:
    """Compute S(x) = (1 - h**(#L - 1)) mod (x**(q**n - 1) - 1) over F_q.

    `subfield_order` names the order of L, a subfield of F_{q^n} that must
    contain the image h(F_{q^n}^x); the containment is validated.  When None,
    the smallest such L is found by evaluating h on every nonzero point.
    Smaller L means a smaller exponent and a faster build, and any valid L
    yields a sound test.  The powering is binary exponentiation with cyclic
    reduction (convolution of coefficient sequences) after every multiply.
    """
    if h.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no root indicator")
    if h.ctx.order != q:
        raise CtxMismatchError(f"h must have coefficients in F_{q}")
    if n < 2:
        raise ValueError("n must be at least 2")
    N = q ** n - 1
    if N > MODULUS_GUARD:
        raise SizeCapError(f"q**n - 1 = {N} exceeds module guard {MODULUS_GUARD}")
    p = h.ctx.p
    big = make_field(p, h.ctx.m * n)
    emb = subfield_embedding(h.ctx, big)
    h_big = emb.lift_poly(h)
    values = [h_big(FieldElement(big, code)) for code in range(1, big.order)]
    if subfield_order is None:
        t = 1
        for v in values:
            t = math.lcm(t, element_degree(v, p, big.m))
        subfield_order = p ** t
    else:
        pp, t = numtheory.prime_power(subfield_order)
        if pp != p or big.m % t:
            raise BadSubfieldError(
                f"F_{subfield_order} is not a subfield of F_{big.order}")
        for v in values:
            if not v.in_subfield(subfield_order):
                raise BadSubfieldError(
                    f"image of h is not contained in F_{subfield_order}")
    folded = _fold_cyclic(h, N)
    powered = conv_power(folded, subfield_order - 1)
    s_fn = kronecker(h.ctx, N) - powered
    s_poly = PolyFq(h.ctx, s_fn.codes)
    return RootIndicator(base=h, subfield_order=subfield_order,
                         poly=s_poly, coeff_seq=s_fn)


def degree_n_factor_test(h: PolyFq, q: int, n: int,
                         subfield_order: int | None = None) -> Verdict:
    """Proven when h provably has an irreducible factor of degree n over F_q.

    Computes the least period r of the coefficient sequence of the root
    indicator; r not dividing (q**n - 1)/Phi_n(q) is the certificate.
    """
    ri = build_root_indicator(h, q, n, subfield_order)
    r = least_period(ri.coeff_seq)
    thr = threshold(n, q)
    status = PROVEN if thr % r else INCONCLUSIVE
    return Verdict(status=status, least_period=r, threshold=thr, modulus=q ** n - 1)


def support_degree_test(s: SupportSet, q: int, n: int) -> SupportDegreeReport:
    """Period-based membership tests for a support inside Z_{q^n-1}."""
    N = q ** n - 1
    if s.N != N:
        raise ValueError(f"support modulus {s.N} is not q**n - 1 = {N}")
    r = dft_period_by_support(s)
    thr = threshold(n, q)
    sufficient = Verdict(status=PROVEN if thr % r else INCONCLUSIVE,
                         least_period=r, threshold=thr, modulus=N)
    necessary = all((q ** d - 1) % r for d in numtheory.divisors(n) if d < n)
    return SupportDegreeReport(least_period=r, threshold=thr,
                               sufficient=sufficient,
                               necessary_holds=necessary,
                               max_period=(r == N))


def irreducible_sufficient_test(h: PolyFq, q: int,
                                subfield_order: int | None = None) -> Verdict:
    """Proven when h (of degree n >= 2) is provably irreducible.

    A degree-n factor of a degree-n polynomial is the polynomial itself up to
    a scalar, so this is the degree-n factor test with n = deg h.
    """
    n = h.degree
    if n < 2:
        raise DegreeMismatchError("irreducibility test needs degree >= 2")
    return degree_n_factor_test(h, q, n, subfield_order)


def coprime_divisor_test(h: PolyFq, q: int, n: int) -> Verdict:
    """Proven when h vanishes at zeta**a and zeta**b for coprime divisors a, b.

    Two support exponents that are coprime divisors of q**n - 1 force the
    maximal least period, hence a degree-n element among the roots.  The
    lexicographically smallest qualifying pair is reported.
    """
    if h.is_zero():
        raise ZeroPolynomialError("the zero polynomial is excluded")
    if h.ctx.order != q:
        raise CtxMismatchError(f"h must have coefficients in F_{q}")
    N = q ** n - 1
    if N > MODULUS_GUARD:
        raise SizeCapError(f"q**n - 1 = {N} exceeds module guard {MODULUS_GUARD}")
    big = make_field(h.ctx.p, h.ctx.m * n)
    emb = subfield_embedding(h.ctx, big)
    h_big = emb.lift_poly(h)
    zeta = primitive_element(big)
    divs = numtheory.divisors(N)
    is_root = {d: h_big(zeta ** d).code == 0 for d in divs}
    thr = threshold(n, q)
    for i, a in enumerate(divs):
        if not is_root[a]:
            continue
        for b in divs[i:]:
            if math.gcd(a, b) == 1 and is_root[b]:
                return Verdict(status=PROVEN, least_period=N, threshold=thr,
                               modulus=N, divisor_pair=(a, b))
    return Verdict(status=INCONCLUSIVE, threshold=thr, modulus=N)


# ----------------------------------------------------------------------
# independent oracles


def oracle_irreducible(h: PolyFq) -> bool:
    """Frobenius-power irreducibility test over h's coefficient field.

    h of degree n is irreducible iff x**(q**n) = x mod h and, for every prime
    t | n, gcd(x**(q**(n/t)) - x, h) is constant.
    """
    if h.is_zero():
        raise ZeroPolynomialError("the zero polynomial is not testable")
    n = h.degree
    if n == 0:
        return False
    if n == 1:
        return True
    q = h.ctx.order
    hm = h.monic()
    x = PolyFq.x(h.ctx)
    for t in numtheory.prime_factors(n):
        g = poly_gcd(x.pow_mod(q ** (n // t), hm) - (x % hm), hm)
        if g.degree != 0:
            return False
    return x.pow_mod(q ** n, hm) == x % hm


def _pth_root_poly(f: PolyFq) -> PolyFq:
    """p-th root of a polynomial whose derivative vanishes (f = g(x**p))."""
    ctx = f.ctx
    p = ctx.p
    inv_frob = p ** (ctx.m - 1)  # a -> a**(p**(m-1)) inverts the Frobenius
    codes = []
    for i in range(0, len(f.codes), p):
        codes.append(ctx.pow_code(f.codes[i], inv_frob))
    return PolyFq(ctx, codes)


def _squarefree_parts(f: PolyFq) -> list[tuple[PolyFq, int]]:
    """Decompose monic f as a product of squarefree parts with multiplicities."""
    p = f.ctx.p
    parts = []
    fp = f.derivative()
    if fp.is_zero():
        for g, e in _squarefree_parts(_pth_root_poly(f)):
            parts.append((g, e * p))
        return parts
    c = poly_gcd(f, fp)
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            parts.append((z, i))
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        for g, e in _squarefree_parts(_pth_root_poly(c)):
            parts.append((g, e * p))
    return parts


def _distinct_degree_split(f: PolyFq) -> list[int]:
    """Degrees (with multiplicity) of the irreducible factors of squarefree monic f."""
    q = f.ctx.order
    x = PolyFq.x(f.ctx)
    degrees = []
    d = 1
    while f.degree >= 2 * d:
        g = poly_gcd(x.pow_mod(q ** d, f) - (x % f), f)
        if g.degree > 0:
            degrees.extend([d] * (g.degree // d))
            f = f // g
        d += 1
    if f.degree > 0:
        degrees.append(f.degree)
    return degrees


def oracle_factor_degrees(h: PolyFq) -> list[int]:
    """Sorted multiset of irreducible-factor degrees of h, with multiplicity."""
    if h.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no factorization")
    if h.degree == 0:
        return []
    degrees = []
    for g, e in _squarefree_parts(h.monic()):
        for d in _distinct_degree_split(g):
            degrees.extend([d] * e)
    return sorted(degrees)
