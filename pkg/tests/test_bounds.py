import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kitespec.bounds import (
    CERT_MARGIN,
    RADIUS_TOL,
    InequalityCheck,
    clique_lower_bound_spectral,
    eigenvalues,
    jacobi_eigenvalues,
    kite_clique_bound,
    kite_radius_bounds,
    largest_root,
    nikiforov_bound,
    spectral_radius,
    spectrum_sane,
    squarefree_part,
    sturm_chain,
    sturm_count_above,
    verify_lemma41_inequality,
)
from kitespec.charpoly import charpoly
from kitespec.graph import (
    clique_number,
    from_edges,
    make_complete,
    make_cycle,
    make_kite,
    make_path,
    make_star,
)
from kitespec.polynomial import IntPolynomial, X

from conftest import random_graph


class TestJacobi:
    def test_known_2x2(self):
        vals = jacobi_eigenvalues([[2.0, 1.0], [1.0, 2.0]])
        assert sorted(vals) == pytest.approx([1.0, 3.0], abs=1e-12)

    def test_path3(self):
        vals = sorted(jacobi_eigenvalues([[0, 1, 0], [1, 0, 1], [0, 1, 0]]))
        r2 = math.sqrt(2)
        assert vals == pytest.approx([-r2, 0.0, r2], abs=1e-12)

    def test_matches_charpoly_roots(self, rng):
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 8))
            spec = eigenvalues(g)
            poly = charpoly(g)
            for v in spec.values:
                assert abs(poly(v)) < 1e-6 * max(1.0, abs(v)) ** g.n

    def test_spectrum_sane(self, rng):
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 9))
            assert spectrum_sane(eigenvalues(g), g.edge_count())


class TestSturm:
    def test_largest_root_quadratic(self):
        # x^2 - 2 -> sqrt(2)
        assert largest_root(X**2 - 2) == pytest.approx(math.sqrt(2), abs=1e-10)

    def test_largest_root_with_repeated_factors(self):
        # complete graph K5: (x - 4)(x + 1)^4
        assert largest_root(charpoly(make_complete(5))) == pytest.approx(4.0, abs=1e-10)

    def test_squarefree_part(self):
        p = (X - 1) ** 3 * (X + 2)
        sf = squarefree_part(p)
        assert sf.degree == 2
        assert sf(1) == 0 and sf(-2) == 0

    def test_count_above(self):
        chain = sturm_chain(X**2 - 2)
        # roots at +-sqrt(2); above 0 there is one
        assert sturm_count_above(chain, 0, 0) == 1
        assert sturm_count_above(chain, -2, 0) == 2
        assert sturm_count_above(chain, 2, 0) == 0

    def test_path_radius(self):
        # rho(P_n) = 2 cos(pi / (n+1))
        for n in range(2, 10):
            expect = 2 * math.cos(math.pi / (n + 1))
            assert spectral_radius(make_path(n)) == pytest.approx(expect, abs=1e-9)

    def test_star_radius(self):
        assert spectral_radius(make_star(4)) == pytest.approx(2.0, abs=1e-10)

    def test_complete_radius(self):
        for p in range(2, 9):
            assert spectral_radius(make_complete(p)) == pytest.approx(p - 1, abs=1e-10)

    def test_edgeless(self):
        assert spectral_radius(from_edges(3, [])) == 0.0

    def test_jacobi_agrees_with_sturm(self, rng):
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 9))
            if g.edge_count() == 0:
                continue
            assert max(eigenvalues(g).values) == pytest.approx(
                spectral_radius(g), abs=1e-8
            )


class TestRadiusSandwich:
    @pytest.mark.parametrize("p", range(3, 13))
    def test_bounds_bracket_true_radius(self, p):
        bounds = kite_radius_bounds(p)
        for q in range(1, 8):
            rho = spectral_radius(make_kite(p=p, q=q))
            assert bounds.lower < rho < bounds.upper

    def test_requires_p_at_least_3(self):
        with pytest.raises(ValueError):
            kite_radius_bounds(2)

    def test_known_values(self):
        b3 = kite_radius_bounds(3)
        assert b3.lower == pytest.approx(2 + 1 / 9 + 1 / 27)
        assert b3.upper == pytest.approx(2 + 1 / 12 + 1 / 3)


class TestSpectralCliqueBound:
    def test_nikiforov_monotone_in_r(self):
        vals = [nikiforov_bound(10, r) for r in range(1, 8)]
        assert vals == sorted(vals)

    def test_bound_is_sound(self, rng):
        for _ in range(80):
            g = random_graph(rng, rng.randint(1, 8))
            assert clique_lower_bound_spectral(g) <= clique_number(g)

    def test_tight_on_complete(self):
        for p in range(2, 8):
            assert clique_lower_bound_spectral(make_complete(p)) == p

    def test_cycle5(self):
        assert clique_lower_bound_spectral(make_cycle(5)) == 2

    def test_kite_case(self):
        assert clique_lower_bound_spectral(make_kite(p=7, q=2)) == 5

    def test_kite_formula(self):
        assert kite_clique_bound(7, 2) == 4
        assert kite_clique_bound(9, 1) == 8
        with pytest.raises(ValueError):
            kite_clique_bound(2, 1)

    @pytest.mark.parametrize("p", range(5, 12))
    def test_formula_never_exceeds_certified_bound_domain(self, p):
        # Inside the regime p - 2q >= 3 the spectral certificate must reach
        # at least the closed-form bound.
        q = 1
        while p - 2 * q >= 3:
            g = make_kite(p=p, q=q)
            assert clique_lower_bound_spectral(g) >= kite_clique_bound(p, q)
            q += 1


class TestInequalityVerification:
    def test_exhaustive_small(self):
        checks = verify_lemma41_inequality(20)
        assert checks and all(c.holds for c in checks)

    def test_check_fields_exact(self):
        checks = verify_lemma41_inequality(7)
        for c in checks:
            assert isinstance(c.lhs_squared, Fraction)
            assert isinstance(c.rhs_squared, Fraction)
            two_m = c.p * c.p - c.p + 2 * c.q
            assert c.lhs_squared == Fraction(two_m * (c.r - 1), c.r)

    def test_json_round_trip(self):
        c = verify_lemma41_inequality(5)[0]
        d = c.to_json()
        assert Fraction(d["lhs_squared"]) == c.lhs_squared
        assert d["holds"] is True

    def test_rejects_tiny_pmax(self):
        with pytest.raises(ValueError):
            verify_lemma41_inequality(2)
