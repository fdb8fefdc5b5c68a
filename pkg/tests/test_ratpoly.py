import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signed_inertia.ratpoly import (
    Inertia,
    RationalPolynomial,
    cauchy_root_bound,
    count_real_roots,
    is_square_free,
    isolate_positive_roots,
    poly_gcd,
    rational_root_in,
    real_rooted_inertia,
    refine_interval,
    square_free_decomposition,
    square_free_part,
    sturm_chain,
    sturm_count,
)

T = RationalPolynomial.variable()

rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=6
)


class TestArithmetic:
    def test_ring_basics(self):
        p = (T - 1) * (T + 2)
        assert p.coeffs == (F(-2), F(1), F(1))
        assert p(1) == 0 and p(-2) == 0 and p(0) == -2
        q, r = divmod(p, T - 1)
        assert q == T + 2 and r.is_zero

    def test_division_with_remainder(self):
        p = T**3 + 2 * T + 5
        d = T**2 - 1
        q, r = divmod(p, d)
        assert q * d + r == p
        assert r.degree < d.degree

    def test_zero_handling(self):
        z = RationalPolynomial.zero()
        assert z.is_zero and z.degree == -1
        with pytest.raises(ZeroDivisionError):
            divmod(T, z)

    @given(st.lists(rationals, min_size=0, max_size=6))
    def test_eval_matches_horner_sum(self, coeffs):
        p = RationalPolynomial(coeffs)
        x = F(3, 7)
        expected = sum(c * x**k for k, c in enumerate(coeffs))
        assert p(x) == expected

    def test_compose_scale(self):
        p = (T - 2) * (T - 6)
        assert p.compose_scale(2) == (2 * T - 2) * (2 * T - 6)


class TestGcdAndSquareFree:
    def test_gcd_of_shared_factor(self):
        g = poly_gcd((T - 1) * (T - 2) * (T + 5), (T - 2) * (T - 7))
        assert g == (T - 2)

    def test_gcd_coprime(self):
        assert poly_gcd(T - 1, T - 2).degree == 0

    def test_square_free_part_examples(self):
        assert square_free_part((T**2) * (T - 2) ** 2) == (T * (T - 2)).monic()
        assert square_free_part(T - 1) == T - 1
        assert square_free_part(T**3) == T

    def test_square_free_part_rejects_zero(self):
        with pytest.raises(ValueError, match="square-free part"):
            square_free_part(RationalPolynomial.zero())

    @given(
        st.lists(
            st.tuples(
                st.fractions(min_value=-5, max_value=5, max_denominator=4),
                st.integers(min_value=1, max_value=3),
            ),
            min_size=1,
            max_size=4,
            unique_by=lambda rm: rm[0],
        )
    )
    @settings(max_examples=60, deadline=None)
    def test_square_free_degree_counts_distinct_roots(self, root_mults):
        p = RationalPolynomial.one()
        for root, mult in root_mults:
            p = p * (T - root) ** mult
        assert square_free_part(p).degree == len(root_mults)

    def test_yun_decomposition_reassembles(self):
        p = 3 * (T - 1) ** 2 * (T + 2) * (T - F(1, 3)) ** 4
        parts = square_free_decomposition(p)
        rebuilt = RationalPolynomial.one()
        for factor, mult in parts:
            rebuilt = rebuilt * factor**mult
        assert rebuilt == p.monic()
        assert all(is_square_free(f) for f, _ in parts)


class TestRealRootedInertia:
    def test_examples(self):
        assert real_rooted_inertia(T * (T - 3) * (T + 1)) == Inertia(1, 1, 1)
        assert real_rooted_inertia(T**3) == Inertia(0, 0, 3)
        assert real_rooted_inertia(T * (T + 3) ** 2) == Inertia(0, 2, 1)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            real_rooted_inertia(RationalPolynomial.zero())

    @given(
        st.lists(
            st.fractions(min_value=-8, max_value=8, max_denominator=5),
            min_size=1,
            max_size=6,
        )
    )
    @settings(max_examples=80, deadline=None)
    def test_census_of_linear_factor_products(self, roots):
        p = RationalPolynomial.from_roots(roots)
        expected = Inertia(
            sum(1 for r in roots if r > 0),
            sum(1 for r in roots if r < 0),
            sum(1 for r in roots if r == 0),
        )
        assert real_rooted_inertia(p) == expected


class TestIsolation:
    def test_examples(self):
        iso = isolate_positive_roots(T * (T - 2))
        assert len(iso) == 1
        (lo, hi), mult = iso[0]
        assert mult == 1 and lo < 2 < hi

        iso = isolate_positive_roots((T**2) * (T - 2) ** 2)
        assert len(iso) == 1 and iso[0][1] == 2

        assert isolate_positive_roots(T + 1) == []

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            isolate_positive_roots(RationalPolynomial.zero())

    def test_intervals_disjoint_sorted_positive(self):
        rng = random.Random(7)
        for _ in range(25):
            roots = sorted(
                F(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(5)
            )
            mults = [rng.randint(1, 3) for _ in roots]
            p = RationalPolynomial.one()
            for r, m in zip(roots, mults):
                p = p * (T - r) ** m
            iso = isolate_positive_roots(p)
            expected = sum(m for r, m in zip(roots, mults) if r > 0)
            assert sum(m for _, m in iso) == expected
            prev_hi = F(0)
            for (lo, hi), _ in iso:
                assert 0 < lo < hi
                assert lo >= prev_hi
                prev_hi = hi

    def test_refinement_never_loses_the_root(self):
        p = (T - F(7, 3)) * (T + 1)
        [(interval, _)] = isolate_positive_roots(p)
        lo, hi = interval
        for _ in range(30):
            lo, hi = refine_interval(square_free_part(p), lo, hi)
            assert lo < F(7, 3) < hi

    def test_multiplicity_totals_match_census(self):
        rng = random.Random(11)
        for _ in range(20):
            roots = [F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(4)]
            mults = [rng.randint(1, 3) for _ in roots]
            p = RationalPolynomial.one()
            seen = set()
            for r, m in zip(roots, mults):
                if r in seen:
                    continue
                seen.add(r)
                p = p * (T - r) ** m
            census = real_rooted_inertia(p)
            iso = isolate_positive_roots(p)
            assert sum(m for _, m in iso) == p.degree - census.n_minus - census.n_zero


class TestRationalRootDetection:
    def test_rational_roots_found_exactly(self):
        p = (T - 1) * (T - F(3, 2)) ** 2 * (T - 2) ** 3 * (T + 1)
        iso = isolate_positive_roots(p)
        roots = [rational_root_in(p, lo, hi) for (lo, hi), _ in iso]
        assert roots == [F(1), F(3, 2), F(2)]

    def test_irrational_root_reports_none(self):
        p = T**2 - 2
        [(interval, _)] = isolate_positive_roots(p)
        assert rational_root_in(p, *interval) is None

    def test_large_denominator_root(self):
        p = (97 * T - 13) * (T - 5)
        iso = isolate_positive_roots(p)
        assert rational_root_in(p, *iso[0][0]) == F(13, 97)


class TestSturm:
    def test_counts_roots_in_intervals(self):
        p = (T - 1) * (T - 2) * (T - 3)
        chain = sturm_chain(p)
        assert sturm_count(chain, F(0), F(4)) == 3
        assert sturm_count(chain, F(3, 2), F(5, 2)) == 1
        assert sturm_count(chain, F(7, 2), F(9, 2)) == 0

    def test_count_real_roots(self):
        assert count_real_roots((T**2 + 1) * (T - 5)) == 1
        assert count_real_roots((T**2 + 4)) == 0
        assert count_real_roots((T - 1) ** 5) == 1

    def test_cauchy_bound_contains_roots(self):
        p = (T - 9) * (T + F(17, 2))
        b = cauchy_root_bound(p)
        assert b > 9 and -b < -F(17, 2)
