import math
from fractions import Fraction

import pytest

from twobridge import (
    ConwayForm,
    DomainError,
    LaurentPolynomial,
    NormalizationError,
    SchubertForm,
    SeifertMatrix,
    SingularError,
    alexander_poly,
    conway_even_form,
    genus3_closed_form,
    is_tau_zero,
    knot_determinant,
    kx_alexander_closed,
    kx_family,
    second_derivative_at_one,
    seifert_from_conway,
    signature,
)

DELTA_927 = LaurentPolynomial({-3: -1, -2: 5, -1: -11, 0: 15, 1: -11, 2: 5, 3: -1})
DELTA_41 = LaurentPolynomial({-1: -1, 0: 3, 1: -1})
DELTA_TREFOIL = LaurentPolynomial({-1: 1, 0: -1, 1: 1})


def _bare_matrix(entries):
    """SeifertMatrix shell without validation, for exercising error paths."""
    m = object.__new__(SeifertMatrix)
    object.__setattr__(m, "entries", entries)
    return m


class TestLaurentPolynomial:
    def test_drops_zero_coefficients(self):
        assert LaurentPolynomial({2: 0, 1: 3}) == LaurentPolynomial({1: 3})

    def test_arithmetic(self):
        t = LaurentPolynomial.monomial(1, 1)
        tinv = LaurentPolynomial.monomial(1, -1)
        assert t * tinv == LaurentPolynomial.constant(1)
        assert (t + tinv) ** 2 == LaurentPolynomial({-2: 1, 0: 2, 2: 1})
        assert t - t == LaurentPolynomial()

    def test_evaluate(self):
        assert DELTA_41.evaluate(1) == 1
        assert DELTA_41.evaluate(-1) == 5
        assert DELTA_41.evaluate(Fraction(1, 2)) == Fraction(1, 2)

    def test_symmetry(self):
        assert DELTA_927.is_symmetric()
        assert not LaurentPolynomial({0: 1, 1: 2}).is_symmetric()

    def test_str(self):
        assert str(DELTA_927) == "-t^-3+5t^-2-11t^-1+15-11t+5t^2-t^3"
        assert str(DELTA_41) == "-t^-1+3-t"
        assert str(LaurentPolynomial()) == "0"


class TestSeifertFromConway:
    def test_genus3_slice_family_diagonal(self):
        m = seifert_from_conway(ConwayForm((2, 2, -2, 2, 2, -2)))
        assert [m.entries[i][i] for i in range(6)] == [1, -1, -1, -1, 1, 1]
        # unit pattern sits on the even rows only
        assert m.entries[1][0] == m.entries[1][2] == 1
        assert m.entries[3][2] == m.entries[3][4] == 1
        assert m.entries[5][4] == 1
        off = [(i, j) for i in range(6) for j in range(6) if i != j and m.entries[i][j]]
        assert off == [(1, 0), (1, 2), (3, 2), (3, 4), (5, 4)]

    def test_trefoil(self):
        assert seifert_from_conway(ConwayForm((2, -2))).entries == ((1, 0), (1, 1))

    def test_figure_eight(self):
        assert seifert_from_conway(ConwayForm((2, 2))).entries == ((1, 0), (1, -1))

    def test_rejects_bad_entries(self):
        with pytest.raises(DomainError):
            seifert_from_conway(ConwayForm((2, 3)))

    def test_seifert_matrix_validation(self):
        with pytest.raises(DomainError):
            SeifertMatrix(((1, 0), (0, 1)))  # det(M - M^T) = 0


class TestAlexanderPoly:
    def test_927(self):
        m = seifert_from_conway(ConwayForm((2, 2, -2, 2, 2, -2)))
        assert alexander_poly(m) == DELTA_927

    def test_figure_eight(self):
        m = seifert_from_conway(conway_even_form(SchubertForm(5, 2)))
        assert alexander_poly(m) == DELTA_41

    def test_trefoil(self):
        assert alexander_poly(SeifertMatrix(((1, 0), (1, 1)))) == DELTA_TREFOIL

    def test_torus_knot_7(self):
        # S(7,6) is the (2,7) torus knot; alternating signs all the way
        m = seifert_from_conway(conway_even_form(SchubertForm(7, 6)))
        assert alexander_poly(m) == LaurentPolynomial(
            {-3: 1, -2: -1, -1: 1, 0: -1, 1: 1, 2: -1, 3: 1}
        )

    def test_value_one_at_one_and_symmetric(self):
        for alpha in range(3, 40, 2):
            for beta in range(2, alpha, 2):
                if math.gcd(alpha, beta) != 1:
                    continue
                d = alexander_poly(seifert_from_conway(conway_even_form(SchubertForm(alpha, beta))))
                assert d.evaluate(1) == 1
                assert d.is_symmetric()

    def test_normalization_error_on_invalid_matrix(self):
        with pytest.raises(NormalizationError):
            alexander_poly(_bare_matrix(((1, 0), (0, 1))))


class TestConwayEvenForm:
    def test_pinned(self):
        assert conway_even_form(SchubertForm(49, 18)).entries == (2, 2, -2, 2, 2, -2)
        assert conway_even_form(kx_family(2)).entries == (4, 2, -4, 4, 2, -4)
        assert conway_even_form(SchubertForm(5, 2)).entries == (2, 2)

    def test_kx_longitude_template(self):
        for x in range(1, 7):
            assert conway_even_form(kx_family(x)).entries == (
                2 * x, 2, -2 * x, 2 * x, 2, -2 * x
            )

    def test_requires_even_beta(self):
        with pytest.raises(DomainError):
            conway_even_form(SchubertForm(49, 19))

    def test_round_trips_through_cf_value(self):
        from twobridge import ContinuedFraction, cf_eval

        for alpha in range(3, 80, 2):
            for beta in range(2, alpha, 2):
                if math.gcd(alpha, beta) != 1:
                    continue
                c = conway_even_form(SchubertForm(alpha, beta))
                assert cf_eval(ContinuedFraction((0,) + c.entries)) == Fraction(beta, alpha)


class TestSecondDerivative:
    def test_pinned(self):
        assert second_derivative_at_one(DELTA_927) == 0
        assert second_derivative_at_one(DELTA_41) == -2
        delta_83 = LaurentPolynomial({-1: -4, 0: 9, 1: -4})
        assert second_derivative_at_one(delta_83) == -8

    def test_always_even_for_symmetric(self):
        for alpha in range(3, 40, 2):
            for beta in range(2, alpha, 2):
                if math.gcd(alpha, beta) != 1:
                    continue
                d = alexander_poly(seifert_from_conway(conway_even_form(SchubertForm(alpha, beta))))
                assert second_derivative_at_one(d) % 2 == 0

    def test_matches_taylor_shift_oracle(self):
        # independent oracle: expand delta(1+u) as a polynomial in u with
        # exact binomials and read off 2 * [u^2]
        def taylor_second(d):
            from math import comb

            acc = Fraction(0)
            for k, c in d.items():
                # [u^2] of (1+u)^k, valid for negative k via the
                # generalized binomial k(k-1)/2
                acc += c * Fraction(k * (k - 1), 2)
            return 2 * acc

        # the generalized binomial IS k(k-1)/2, so build a second, truly
        # distinct oracle: evaluate at 1+u for u an exact dual number
        # representation (a, b, c) ~ a + b u + c u^2 mod u^3
        def dual_eval(d):
            def mul(p, q):
                return (
                    p[0] * q[0],
                    p[0] * q[1] + p[1] * q[0],
                    p[0] * q[2] + p[1] * q[1] + p[2] * q[0],
                )

            def power(base, n):
                result = (Fraction(1), Fraction(0), Fraction(0))
                inv = n < 0
                n = abs(n)
                for _ in range(n):
                    result = mul(result, base)
                if inv:
                    # invert a + bu + cu^2 mod u^3
                    a, b, c = result
                    ia = 1 / a
                    ib = -b * ia * ia
                    ic = (b * b / a - c) * ia * ia
                    return (ia, ib, ic)
                return result

            one_plus_u = (Fraction(1), Fraction(1), Fraction(0))
            total = (Fraction(0), Fraction(0), Fraction(0))
            for k, c in d.items():
                term = power(one_plus_u, k)
                total = (total[0] + c * term[0], total[1] + c * term[1], total[2] + c * term[2])
            return 2 * total[2]

        for alpha in range(3, 40, 2):
            for beta in range(2, alpha, 2):
                if math.gcd(alpha, beta) != 1:
                    continue
                d = alexander_poly(seifert_from_conway(conway_even_form(SchubertForm(alpha, beta))))
                expected = second_derivative_at_one(d)
                assert taylor_second(d) == expected
                assert dual_eval(d) == expected


class TestKxClosedForm:
    def test_x1_matches_927(self):
        assert kx_alexander_closed(1) == DELTA_927

    def test_x2_by_substitution(self):
        assert kx_alexander_closed(2) == LaurentPolynomial(
            {-3: -16, 3: -16, -2: 92, 2: 92, -1: -224, 1: -224, 0: 297}
        )

    def test_value_one_at_one(self):
        for x in range(1, 21):
            assert kx_alexander_closed(x).evaluate(1) == 1

    def test_pipeline_equality(self):
        for x in range(1, 7):
            m = seifert_from_conway(conway_even_form(kx_family(x)))
            assert alexander_poly(m) == kx_alexander_closed(x)

    def test_second_derivative_vanishes(self):
        for x in range(1, 21):
            assert second_derivative_at_one(kx_alexander_closed(x)) == 0


class TestGenus3ClosedForm:
    def test_slice_family_diagonal(self):
        for x in range(1, 7):
            got = genus3_closed_form(x, -1, -x, -x, 1, x)
            one_minus_t = LaurentPolynomial({0: 1, 1: -1})
            t = LaurentPolynomial.monomial(1, 1)
            expected = (
                -(x**4) * one_minus_t**6 - x * x * t * one_minus_t**4 + t**3
            )
            assert got == expected

    def test_all_zero_diagonal(self):
        assert genus3_closed_form(0, 0, 0, 0, 0, 0) == LaurentPolynomial.monomial(1, 3)

    def test_agrees_with_determinant_on_balanced_diagonals(self):
        # A + C = D + F = 0 is where the published expansion is exact
        for diag in [(1, -1, -1, -1, 1, 1), (2, -1, -2, -2, 1, 2), (3, 1, -3, -3, -1, 3)]:
            entries = tuple(
                (2 * d) if i % 2 == 0 else (-2 * d) for i, d in enumerate(diag)
            )
            m = seifert_from_conway(ConwayForm(entries))
            shifted = genus3_closed_form(*diag).shifted(-3)
            assert alexander_poly(m) == shifted

    def test_generic_diagonal_disagrees_with_determinant(self):
        # (1,1,1,1,1,1) comes from C[2,-2,2,-2,2,-2], the (2,7) torus knot.
        # The determinant route is authoritative; the published expansion
        # misses the (A+C)(D+F)-coupled terms and differs here.
        m = seifert_from_conway(ConwayForm((2, -2, 2, -2, 2, -2)))
        det_route = alexander_poly(m)
        closed = genus3_closed_form(1, 1, 1, 1, 1, 1).shifted(-3)
        assert closed != det_route
        assert closed.evaluate(2) == Fraction(19, 8)
        assert det_route.evaluate(2) == Fraction(43, 8)


class TestSignature:
    def test_927_vanishes(self):
        assert signature(seifert_from_conway(ConwayForm((2, 2, -2, 2, 2, -2)))) == 0

    def test_trefoil(self):
        assert signature(SeifertMatrix(((1, 0), (1, 1)))) == 2

    def test_figure_eight(self):
        assert signature(SeifertMatrix(((1, 0), (1, -1)))) == 0

    def test_slice_family(self):
        for x in range(1, 11):
            assert signature(seifert_from_conway(conway_even_form(kx_family(x)))) == 0

    def test_even_for_knots(self):
        for alpha in range(3, 40, 2):
            for beta in range(2, alpha, 2):
                if math.gcd(alpha, beta) != 1:
                    continue
                assert signature(seifert_from_conway(conway_even_form(SchubertForm(alpha, beta)))) % 2 == 0

    def test_singular_error(self):
        with pytest.raises(SingularError):
            signature(_bare_matrix(((0, 0), (0, 0))))

    def test_zero_diagonal_pivoting(self):
        # hits the row/column addition branch of the diagonalization
        from twobridge.alexander import _symmetric_signature

        rows = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
        assert _symmetric_signature(rows) == 0


class TestDeterminant:
    def test_pinned(self):
        assert knot_determinant(ConwayForm((2, -2))) == 3
        assert knot_determinant(ConwayForm((2, 2))) == 5
        assert knot_determinant(ConwayForm((2, 2, -2, 2, 2, -2))) == 49

    def test_equals_alpha(self):
        for alpha in range(3, 120, 2):
            for beta in range(2, alpha, 2):
                if math.gcd(alpha, beta) != 1:
                    continue
                assert knot_determinant(conway_even_form(SchubertForm(alpha, beta))) == alpha

    def test_matches_alexander_at_minus_one(self):
        for alpha in range(3, 40, 2):
            for beta in range(2, alpha, 2):
                if math.gcd(alpha, beta) != 1:
                    continue
                c = conway_even_form(SchubertForm(alpha, beta))
                d = alexander_poly(seifert_from_conway(c))
                assert abs(d.evaluate(-1)) == knot_determinant(c)


class TestTauVanishing:
    def test_trivial(self):
        assert is_tau_zero(0)
        assert not is_tau_zero(2)
        assert not is_tau_zero(-4)


class TestDeterminantHelpers:
    def test_int_det_against_cofactor_oracle(self):
        import random

        from twobridge.alexander import _int_det

        def cofactor_det(m):
            n = len(m)
            if n == 1:
                return m[0][0]
            total = 0
            for j in range(n):
                if m[0][j] == 0:
                    continue
                minor = [row[:j] + row[j + 1:] for row in m[1:]]
                total += (-1) ** j * m[0][j] * cofactor_det(minor)
            return total

        rng = random.Random(20240817)
        for n in range(1, 6):
            for _ in range(40):
                m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
                assert _int_det(m) == cofactor_det(m), m

    def test_int_det_singular_and_permutation(self):
        from twobridge.alexander import _int_det

        assert _int_det([[0, 1], [0, 3]]) == 0
        # zero pivot forces the row-swap branch
        assert _int_det([[0, 1], [1, 0]]) == -1
        assert _int_det([[0, 2, 0], [3, 0, 0], [0, 0, 4]]) == -24
