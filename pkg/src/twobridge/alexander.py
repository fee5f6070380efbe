"""Seifert matrices, Alexander polynomials, and signatures of two-bridge knots.

Everything runs over exact integers and rationals.  The even Conway form
C[e1, ..., e2g] of a knot encodes a genus-g Seifert surface as a chain of
twisted bands; its Seifert matrix has diagonal (-1)^(i+1) * e_i / 2 with
unit entries on the even rows, and the Alexander polynomial is
det(M - t M^T) normalized by a unit times t^(-g) to be symmetric with
value 1 at t = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InternalError, NormalizationError, SingularError
from .rational import ConwayForm, SchubertForm, _as_int


class LaurentPolynomial:
    """Laurent polynomial with integer coefficients, stored sparsely.

    Immutable; zero coefficients are never stored.  A normalized
    Alexander polynomial additionally satisfies coefficient(k) ==
    coefficient(-k) and value 1 at t = 1, but the class itself does not
    force that.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients=None):
        coeffs = {}
        if coefficients:
            for k, v in dict(coefficients).items():
                if v != 0:
                    coeffs[int(k)] = int(v)
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    def coefficient(self, k: int) -> int:
        return self._coeffs.get(k, 0)

    def items(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._coeffs.items())

    def exponents(self) -> list[int]:
        return sorted(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_symmetric(self) -> bool:
        return all(self.coefficient(-k) == c for k, c in self._coeffs.items())

    def shifted(self, k: int) -> "LaurentPolynomial":
        """Multiply by t^k."""
        return LaurentPolynomial({e + k: c for e, c in self._coeffs.items()})

    def evaluate(self, x):
        """Exact value at x (int or Fraction); x must be nonzero if any exponent is negative."""
        total = Fraction(0)
        for k, c in self._coeffs.items():
            total += c * Fraction(x) ** k
        return total if total.denominator != 1 else total.numerator

    def __eq__(self, other):
        return isinstance(other, LaurentPolynomial) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __neg__(self):
        return LaurentPolynomial({k: -c for k, c in self._coeffs.items()})

    def __add__(self, other):
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPolynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        out = {}
        for k1, c1 in self._coeffs.items():
            for k2, c2 in other._coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("only nonnegative powers are supported")
        result = LaurentPolynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"LaurentPolynomial({dict(self.items())})"


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer Seifert matrix of even size 2g with det(M - M^T) = 1."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(
            tuple(_as_int(x, "Seifert matrix entry") for x in row) for row in self.entries
        )
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0 or n % 2 != 0 or any(len(r) != n for r in rows):
            raise DomainError("Seifert matrix must be square of even size >= 2")
        skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
        if _int_det(skew) != 1:
            raise DomainError("det(M - M^T) must be 1 for a Seifert matrix")

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.size // 2


# -- dense integer-polynomial helpers (little-endian coefficient lists) --


def _ptrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _psub(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _ptrim(out)


def _pdiv_exact(a, b):
    """Divide polynomial a by b, asserting the remainder is zero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    out = [0] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b):
        q, r = divmod(rem[-1], b[-1])
        if r != 0:
            raise InternalError("inexact polynomial division in determinant")
        shift = len(rem) - len(b)
        out[shift] = q
        for i, bi in enumerate(b):
            rem[shift + i] -= q * bi
        _ptrim(rem)
        if not rem:
            break
    if rem:
        raise InternalError("inexact polynomial division in determinant")
    return _ptrim(out)


def _is_tridiagonal(m) -> bool:
    n = len(m)
    return all(not m[i][j] for i in range(n) for j in range(n) if abs(i - j) > 1)


def _poly_det(m):
    """Exact determinant of a matrix of integer polynomials.

    Uses the three-term recurrence when the matrix is tridiagonal (always
    the case for matrices built from Conway forms, and linear in the
    size); otherwise falls back to fraction-free Bareiss elimination.
    """
    n = len(m)
    if _is_tridiagonal(m):
        prev, cur = [1], m[0][0]
        for k in range(1, n):
            nxt = _psub(_pmul(m[k][k], cur), _pmul(_pmul(m[k][k - 1], m[k - 1][k]), prev))
            prev, cur = cur, nxt
        return cur
    a = [[list(x) for x in row] for row in m]
    sign = 1
    prev_pivot = [1]
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return []
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _psub(_pmul(a[i][j], a[k][k]), _pmul(a[i][k], a[k][j]))
                a[i][j] = _pdiv_exact(num, prev_pivot)
            a[i][k] = []
        prev_pivot = a[k][k]
    det = a[n - 1][n - 1]
    return [sign * c for c in det]


def _int_det(m) -> int:
    """Exact determinant of an integer matrix via the polynomial helpers."""
    poly = _poly_det([[[x] if x else [] for x in row] for row in m])
    return poly[0] if poly else 0


def seifert_from_conway(c: ConwayForm) -> SeifertMatrix:
    """Seifert matrix of the even Conway form C[e1, ..., e2g].

    Diagonal entry i is (-1)^(i+1) * e_i / 2 (1-based) and every even row
    2k carries unit entries in columns 2k-1 and 2k+1; all other entries
    vanish.
    """
    n = len(c.entries)
    rows = [[0] * n for _ in range(n)]
    for i, e in enumerate(c.entries, start=1):
        rows[i - 1][i - 1] = (e // 2) if i % 2 == 1 else -(e // 2)
    for r in range(1, n, 2):  # 0-based even rows 2k
        rows[r][r - 1] = 1
        if r + 1 < n:
            rows[r][r + 1] = 1
    return SeifertMatrix(tuple(tuple(r) for r in rows))


def alexander_poly(M: SeifertMatrix) -> LaurentPolynomial:
    """Normalized Alexander polynomial det(M - t M^T) * (unit * t^-g).

    The unit sign is fixed by requiring value 1 at t = 1, and the result
    must come out symmetric; anything else signals an invalid Seifert
    matrix and raises NormalizationError.
    """
    n = M.size
    g = M.genus
    entries = M.entries
    P = [
        [_ptrim([entries[i][j], -entries[j][i]]) for j in range(n)]
        for i in range(n)
    ]
    det = _poly_det(P)
    if not det:
        raise NormalizationError("det(M - t M^T) vanishes identically")
    at_one = sum(det)
    if abs(at_one) != 1:
        raise NormalizationError(f"determinant evaluates to {at_one} at t=1, not a unit")
    poly = LaurentPolynomial({k - g: at_one * c for k, c in enumerate(det)})
    if not poly.is_symmetric():
        raise NormalizationError("no unit multiple of t^-g makes the determinant symmetric")
    return poly


def conway_even_form(s: SchubertForm) -> ConwayForm:
    """Even Conway form: tail of the unique all-even expansion of beta/alpha.

    At every step exactly one of floor and ceiling of the residual target
    is even, so the expansion is forced term by term; the residual
    denominator strictly decreases, and for an even beta over an odd
    alpha the walk can only terminate at an even integer.
    """
    if s.beta % 2 != 0:
        raise DomainError(f"conway_even_form needs the canonical even-beta form, got {s}")
    entries = []
    num, den = s.alpha, s.beta
    while True:
        q, rem = divmod(num, den)
        if rem == 0:
            if q % 2 != 0:
                raise InternalError(f"all-even expansion of {s} ended on odd term {q}")
            entries.append(q)
            break
        a = q if q % 2 == 0 else q + 1
        assert abs(a) >= 2, "residual targets always exceed 1 in absolute value"
        entries.append(a)
        num, den = den, num - a * den
        if den < 0:
            num, den = -num, -den
    if len(entries) % 2 != 0:
        raise InternalError(f"all-even expansion of {s} has odd length")
    return ConwayForm(tuple(entries))


def second_derivative_at_one(d: LaurentPolynomial) -> int:
    """d''(1) = sum of coefficient(k) * k * (k-1); an even integer for symmetric d."""
    return sum(c * k * (k - 1) for k, c in d.items())


def kx_alexander_closed(x: int) -> LaurentPolynomial:
    """Closed-form Alexander polynomial of the C[2x,2,-2x,2x,2,-2x] family."""
    if x < 1:
        raise DomainError(f"family parameter must be >= 1, got {x}")
    x2, x4 = x * x, x**4
    return LaurentPolynomial(
        {
            -3: -x4,
            3: -x4,
            -2: 6 * x4 - x2,
            2: 6 * x4 - x2,
            -1: -(15 * x4 - 4 * x2),
            1: -(15 * x4 - 4 * x2),
            0: 20 * x4 - 6 * x2 + 1,
        }
    )


def genus3_closed_form(A: int, B: int, C: int, D: int, E: int, F: int) -> LaurentPolynomial:
    """Published degree-6 expansion of det(M - t M^T) for diagonal (A,...,F).

    Reproduced verbatim for cross-checking.  It agrees with the
    determinant whenever A+C = D+F = 0 (which covers the slice family)
    but not in general; the determinant is the authority, and the tests
    pin the mismatch rather than patching the formula.
    """
    one_minus_t = LaurentPolynomial({0: 1, 1: -1})
    t = LaurentPolynomial.monomial(1, 1)
    middle = (A + C) * D * E * F - A * B * C * (D + F) + A * B * E * F
    return (
        A * B * C * D * E * F * one_minus_t**6
        + middle * t * one_minus_t**4
        + (A * B + E * F) * t**2 * one_minus_t**2
        + t**3
    )


def _symmetric_signature(rows: list[list[Fraction]]) -> int:
    """Signature of a symmetric rational matrix by congruence diagonalization."""
    s = [row[:] for row in rows]
    n = len(s)
    signature_value = 0
    for k in range(n):
        if s[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if s[i][i] != 0), None)
            if swap is not None:
                for row in s:
                    row[k], row[swap] = row[swap], row[k]
                s[k], s[swap] = s[swap], s[k]
            else:
                pair = next(
                    ((i, j) for i in range(k, n) for j in range(i + 1, n) if s[i][j] != 0),
                    None,
                )
                if pair is None:
                    raise SingularError("symmetrized matrix is singular")
                i, j = pair
                for row in s:
                    row[i] += row[j]
                for col in range(n):
                    s[i][col] += s[j][col]
                if i != k:
                    for row in s:
                        row[k], row[i] = row[i], row[k]
                    s[k], s[i] = s[i], s[k]
        pivot = s[k][k]
        signature_value += 1 if pivot > 0 else -1
        # Schur complement update of the trailing block; row and column k
        # are consumed and never read again, so they can stay stale.
        for i in range(k + 1, n):
            if s[i][k] != 0:
                factor = s[i][k] / pivot
                for j in range(k + 1, n):
                    s[i][j] -= factor * s[k][j]
    return signature_value


def signature(M: SeifertMatrix) -> int:
    """Knot signature: the signature of M + M^T, computed exactly.

    M + M^T is nonsingular for Seifert matrices of knots (its determinant
    is the knot determinant, an odd integer), so the result is always an
    even integer.
    """
    n = M.size
    sym = [
        [Fraction(M.entries[i][j] + M.entries[j][i]) for j in range(n)]
        for i in range(n)
    ]
    return _symmetric_signature(sym)


def knot_determinant(c: ConwayForm) -> int:
    """|det(M + M^T)| for the Conway form's Seifert matrix, via the
    tridiagonal three-term recurrence (no matrix is built)."""
    prev, cur = 0, 1
    for i, e in enumerate(c.entries, start=1):
        d = (e // 2) if i % 2 == 1 else -(e // 2)
        prev, cur = cur, 2 * d * cur - prev
    return abs(cur)


def is_tau_zero(sigma: int) -> bool:
    """Vanishing test for the concordance invariant of an alternating knot.

    For alternating knots that invariant is a fixed multiple of the
    signature, so only sigma == 0 is ever consumed downstream.
    """
    return sigma == 0
