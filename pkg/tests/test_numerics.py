"""Unit tests for the shared numerical helpers."""

from __future__ import annotations

import numpy as np
import pytest
from scipy import integrate

from contestlab._isotonic import isotonic_projection
from contestlab._quadrature import adaptive_simpson, gauss_legendre
from contestlab._rootfind import bisect_scalar, bisect_vec, expand_upper
from contestlab.errors import SolverError


class TestIsotonicProjection:
    def test_known_small_cases(self):
        np.testing.assert_allclose(isotonic_projection(np.array([3.0, 1.0, 2.0])),
                                   [2.0, 2.0, 2.0])
        np.testing.assert_allclose(isotonic_projection(np.array([1.0, 3.0, 2.0])),
                                   [1.0, 2.5, 2.5])
        np.testing.assert_allclose(isotonic_projection(np.array([4.0, 3.0, 2.0, 1.0])),
                                   [2.5, 2.5, 2.5, 2.5])

    def test_monotone_input_is_fixed_point(self, rng):
        x = np.sort(rng.normal(size=50))
        np.testing.assert_array_equal(isotonic_projection(x), x)

    def test_output_monotone_and_idempotent(self, rng):
        x = rng.normal(size=200)
        p = isotonic_projection(x)
        assert np.all(np.diff(p) >= 0)
        np.testing.assert_allclose(isotonic_projection(p), p, atol=1e-12)

    def test_mean_preserved(self, rng):
        x = rng.normal(size=123)
        assert isotonic_projection(x).mean() == pytest.approx(x.mean(), abs=1e-12)

    def test_order_preserving(self, rng):
        x = rng.normal(size=80)
        y = x + rng.uniform(0.0, 1.0, size=80)
        assert np.all(isotonic_projection(x) <= isotonic_projection(y) + 1e-12)

    def test_is_l2_projection(self, rng):
        # the projection must beat every other monotone candidate
        x = rng.normal(size=60)
        p = isotonic_projection(x)
        best = np.sum((x - p) ** 2)
        for _ in range(20):
            q = np.sort(rng.normal(size=60))
            assert best <= np.sum((x - q) ** 2) + 1e-12

    def test_input_not_modified(self):
        x = np.array([2.0, 1.0])
        isotonic_projection(x)
        np.testing.assert_array_equal(x, [2.0, 1.0])


class TestGaussLegendre:
    def test_polynomial_exactness(self):
        # an n-point rule integrates degree 2n-1 exactly
        for n in (2, 5, 12):
            x, w = gauss_legendre(n, -1.0, 3.0)
            for k in range(2 * n):
                exact = (3.0 ** (k + 1) - (-1.0) ** (k + 1)) / (k + 1)
                assert w @ x**k == pytest.approx(exact, rel=1e-12, abs=1e-12)

    def test_interval_mapping(self):
        x, w = gauss_legendre(8, 2.0, 5.0)
        assert np.all((x > 2.0) & (x < 5.0))
        assert w.sum() == pytest.approx(3.0, rel=1e-14)


class TestAdaptiveSimpson:
    def test_scalar_integrand_matches_quad(self):
        f = lambda s: np.exp(-(s**2))[:, None]
        got = adaptive_simpson(f, -4.0, 6.0, tol=1e-10)
        ref, _ = integrate.quad(lambda s: np.exp(-(s**2)), -4.0, 6.0)
        assert got[0] == pytest.approx(ref, abs=1e-9)

    def test_vector_integrand_componentwise(self):
        ks = np.arange(1.0, 6.0)

        def f(s):
            return np.cos(ks[None, :] * s[:, None])

        got = adaptive_simpson(f, 0.0, 2.0, tol=1e-11)
        ref = np.sin(2.0 * ks) / ks
        np.testing.assert_allclose(got, ref, atol=1e-9)

    def test_needle_is_found(self):
        # narrow bump far from the midpoint, the classic adaptive test
        f = lambda s: np.exp(-4000.0 * (s - 0.17) ** 2)[:, None]
        got = adaptive_simpson(f, 0.0, 1.0, tol=1e-10)
        ref, _ = integrate.quad(lambda s: np.exp(-4000.0 * (s - 0.17) ** 2),
                                0.0, 1.0, epsabs=1e-13)
        assert got[0] == pytest.approx(ref, abs=1e-8)

    def test_empty_interval(self):
        f = lambda s: np.ones((s.size, 3))
        np.testing.assert_array_equal(adaptive_simpson(f, 1.0, 1.0), np.zeros(3))


class TestRootfind:
    def test_bisect_scalar(self):
        root = bisect_scalar(lambda x: x**3 - 2.0, 0.0, 4.0, tol=1e-12)
        assert root == pytest.approx(2.0 ** (1.0 / 3.0), abs=1e-10)

    def test_bisect_vec_batch(self):
        targets = np.array([1.0, 4.0, 9.0, 100.0])
        roots = bisect_vec(lambda x: x * x - targets, np.zeros(4),
                           np.full(4, 20.0), tol=1e-12)
        np.testing.assert_allclose(roots, np.sqrt(targets), atol=1e-10)

    def test_bisect_vec_degenerate_bracket_passthrough(self):
        roots = bisect_vec(lambda x: x - 1.0, np.array([3.0]), np.array([3.0]))
        assert roots[0] == 3.0

    def test_expand_upper_finds_bracket(self):
        hi = expand_upper(lambda x: x - 1000.0, np.array([1.0]))
        assert hi[0] >= 1000.0

    def test_expand_upper_raises_when_hopeless(self):
        with pytest.raises(SolverError, match="bracket"):
            expand_upper(lambda x: -np.ones_like(x), np.array([1.0]),
                         max_doublings=10)
