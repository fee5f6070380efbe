"""Total Culler-Shalen seminorm and the surgery formula for the
SL(2,C) Casson invariant of two-bridge knot surgeries.

For a surgery slope p/q on S(alpha, beta) with boundary slopes N_i of
weight W_i, the seminorm is

    ||p/q||_T = (-|p| + sum_i W_i * |p - q N_i|) / 2

and, when p/q is not a strict boundary slope and no p'-th root of unity
(p' = p for odd p, p/2 for even p) is a root of the Alexander
polynomial,

    lambda(K(p/q)) = ||p/q||_T / 2            for even p,
    lambda(K(p/q)) = ||p/q||_T / 2 - (alpha-1)/4   for odd p.

The difference lambda(K(1/q)) - lambda(K(-1/q)) collapses to the
q-independent quantity (sum_{N<0} W - sum_{N>0} W) / 2, which is the
obstruction driving the homology-sphere cosmetic surgery verdicts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .alexander import (
    LaurentPolynomial,
    _int_det,
    alexander_poly,
    conway_even_form,
    seifert_from_conway,
)
from .errors import DomainError, MeridianError
from .rational import SchubertForm, preferred_form
from .slopes import SlopeSystem, enumerate_bscf


@dataclass(frozen=True)
class SurgerySlope:
    """A surgery slope p/q; q = 0 is allowed only for the meridian 1/0."""

    p: int
    q: int

    def __post_init__(self):
        if self.q == 0:
            if self.p != 1:
                raise DomainError(f"the only slope with q = 0 is the meridian 1/0, got {self}")
        elif self.q < 0:
            raise DomainError(f"q must be positive, got {self}")
        elif math.gcd(abs(self.p), self.q) != 1:
            raise DomainError(f"slope {self} is not reduced")

    @property
    def is_meridian(self) -> bool:
        return self.q == 0

    @classmethod
    def parse(cls, text: str) -> "SurgerySlope":
        text = text.strip()
        if "/" in text:
            p_str, q_str = text.split("/", 1)
            return cls(int(p_str), int(q_str))
        return cls(int(text), 1)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class LambdaValue:
    """A Casson invariant value plus the status of the formula's hypotheses."""

    value: Fraction
    hypotheses_ok: bool
    caveats: tuple[str, ...]

    def __post_init__(self):
        if not self.hypotheses_ok and not self.caveats:
            raise DomainError("failed hypotheses must come with at least one caveat")


def slope_distance(r: SurgerySlope, N: int) -> int:
    """Minimal geometric intersection number |p - q*N| of p/q with N/1."""
    if r.is_meridian:
        raise MeridianError("slope distance from the meridian is not used here")
    return abs(r.p - r.q * N)


def total_seminorm(sys: SlopeSystem, r: SurgerySlope) -> Fraction:
    """Total Culler-Shalen seminorm (-|p| + sum W_i |p - q N_i|) / 2."""
    if r.is_meridian:
        raise MeridianError("the seminorm formula does not apply to the meridian")
    total = sum(rec.weight * slope_distance(r, rec.slope) for rec in sys.records)
    return Fraction(-abs(r.p) + total, 2)


def root_of_unity_check(delta: LaurentPolynomial, p_prime: int) -> bool:
    """True iff no p'-th root of unity is a root of the Alexander polynomial.

    Decided exactly: the resultant of the integer polynomial t^g * delta
    and t^p' - 1 is computed by fraction-free elimination on the
    Sylvester matrix, and the check passes iff it is nonzero.
    """
    if p_prime < 1:
        raise DomainError(f"p' must be >= 1, got {p_prime}")
    if delta.is_zero():
        return False
    exps = delta.exponents()
    shift = -exps[0]
    f = [delta.coefficient(k - shift) for k in range(exps[0] + shift, exps[-1] + shift + 1)]
    g = [-1] + [0] * (p_prime - 1) + [1]  # t^p' - 1
    return _resultant(f, g) != 0


def _resultant(f: list[int], g: list[int]) -> int:
    """Resultant of two integer polynomials via the Sylvester determinant."""
    m, n = len(f) - 1, len(g) - 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    for i in range(n):  # n rows of f's coefficients
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):  # m rows of g's coefficients
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return _int_det(rows)


def lambda_surgery(s: SchubertForm, r: SurgerySlope) -> LambdaValue:
    """SL(2,C) Casson invariant of p/q surgery via the seminorm formula.

    The value is always computed from the parity formula; hypotheses_ok
    reports whether the formula's assumptions could be verified: the
    root-of-unity condition on the Alexander polynomial, and p/q not
    coinciding with a boundary slope (the proxy available here for "not
    a strict boundary slope").
    """
    if r.is_meridian:
        raise MeridianError("the surgery formula does not apply to the trivial surgery")
    canonical, mirrored = preferred_form(s)
    # Canonicalizing an odd beta presents the mirror image, which negates
    # every boundary slope; negating the surgery slope compensates, so the
    # value always describes the input knot.
    r_eff = SurgerySlope(-r.p, r.q) if mirrored else r
    sys = enumerate_bscf(canonical)
    seminorm = total_seminorm(sys, r_eff)
    if r.p % 2 == 0:
        value = seminorm / 2
    else:
        value = seminorm / 2 - Fraction(canonical.alpha - 1, 4)

    caveats: list[str] = []
    ok = True
    if r.p == 0:
        ok = False
        caveats.append("longitudinal slope p = 0: the root-of-unity condition degenerates")
    else:
        p_prime = abs(r.p) if r.p % 2 else abs(r.p) // 2
        delta = alexander_poly(seifert_from_conway(conway_even_form(canonical)))
        if not root_of_unity_check(delta, p_prime):
            ok = False
            caveats.append(
                f"a {p_prime}-th root of unity is a root of the Alexander polynomial"
            )
    if r.q == 1 and r.p % 2 == 0:
        caveats.append("even integer slope: strictness of boundary slopes unverified")
        if any(rec.slope == r_eff.p for rec in sys.records):
            ok = False
            caveats.append(f"{r} is a boundary slope of this knot")
    return LambdaValue(value=value, hypotheses_ok=ok, caveats=tuple(caveats))


def lambda_difference(sys: SlopeSystem, p: int, q: int) -> Fraction:
    """lambda(K(p/q)) - lambda(K(-p/q)) = sum_i W_i(|p - qN_i| - |-p - qN_i|)/4."""
    if p < 1 or p % 2 == 0:
        raise DomainError(f"p must be a positive odd integer, got {p}")
    if q < 1 or math.gcd(p, q) != 1:
        raise DomainError(f"q must be positive and coprime to p, got {p}/{q}")
    total = sum(
        rec.weight * (abs(p - q * rec.slope) - abs(-p - q * rec.slope))
        for rec in sys.records
    )
    return Fraction(total, 4)


def cosmetic_difference(sys: SlopeSystem) -> Fraction:
    """(sum_{N<0} W - sum_{N>0} W) / 2, the q-independent value of
    lambda_difference at p = 1.  Nonzero means no purely cosmetic
    surgery pair of the knot yields homology 3-spheres."""
    negative = sum(rec.weight for rec in sys.records if rec.slope < 0)
    positive = sum(rec.weight for rec in sys.records if rec.slope > 0)
    return Fraction(negative - positive, 2)
