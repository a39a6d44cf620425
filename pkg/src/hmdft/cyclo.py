"""Cyclotomic values and the period threshold (q**n - 1) / Phi_n(q).

Phi_n(q) is evaluated exactly through the Moebius product
prod_{d|n} (q**(n/d) - 1)**mu(d), accumulating numerator and denominator
separately and dividing exactly at the end.  Python integers are unbounded,
so the exact-arithmetic requirement is met with no overflow mode at all.

The threshold (q**n - 1) / Phi_n(q) is what gates every verdict downstream:
a least period that fails to divide it certifies a degree-n element.  Both
classical identities
    Phi_n(q) = gcd{(q**n - 1)/(q**d - 1) : d | n, d < n}
    (q**n - 1)/Phi_n(q) = lcm{q**d - 1 : d | n, d < n}
are re-derived on every threshold call as a self-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadDivisorPairError
from .numtheory import divisors, mobius


def cyclotomic_value(n: int, q: int) -> int:
    """Phi_n(q) as an exact integer (n >= 1, q >= 2)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if q < 2:
        raise ValueError("q must be at least 2")
    num = 1
    den = 1
    for d in divisors(n):
        mu = mobius(d)
        if mu == 1:
            num *= q ** (n // d) - 1
        elif mu == -1:
            den *= q ** (n // d) - 1
    if num % den:
        raise AssertionError("Moebius product failed to divide exactly")
    return num // den


def threshold(n: int, q: int) -> int:
    """(q**n - 1) / Phi_n(q) for n >= 2, cross-checked against gcd/lcm forms."""
    if n < 2:
        raise ValueError("threshold needs n >= 2")
    phi = cyclotomic_value(n, q)
    total = q ** n - 1
    if total % phi:
        raise AssertionError("Phi_n(q) does not divide q**n - 1")
    t = total // phi
    proper = [d for d in divisors(n) if d < n]
    if t != math.lcm(*(q ** d - 1 for d in proper)):
        raise AssertionError("threshold disagrees with the lcm identity")
    if phi != math.gcd(*(total // (q ** d - 1) for d in proper)):
        raise AssertionError("Phi_n(q) disagrees with the gcd identity")
    return t


def divisibility_check(n: int, m: int, q: int) -> bool:
    """Whether Phi_n(q) divides (q**n - 1)/(q**m - 1); holds for any m | n, m < n."""
    if m <= 0 or m >= n or n % m:
        raise BadDivisorPairError(f"need m | n with 0 < m < n, got m={m}, n={n}")
    quotient = (q ** n - 1) // (q ** m - 1)
    return quotient % cyclotomic_value(n, q) == 0


@dataclass(frozen=True)
class CycloValue:
    """Phi_n(q) together with the derived period threshold."""

    n: int
    q: int
    phi: int
    threshold: int

    def __post_init__(self):
        if self.phi * self.threshold != self.q ** self.n - 1:
            raise AssertionError("phi * threshold must equal q**n - 1")


def cyclotomic_data(n: int, q: int) -> CycloValue:
    """Bundle Phi_n(q) and (q**n - 1)/Phi_n(q) for n >= 2."""
    return CycloValue(n=n, q=q, phi=cyclotomic_value(n, q), threshold=threshold(n, q))
