import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from icbounds.infotheory import (
    channel_capacity,
    entropy,
    kl_divergence,
    mutual_information,
    three_way_mi,
)


def random_joint(rng, shape):
    t = rng.dirichlet(np.ones(int(np.prod(shape))))
    return t.reshape(shape)


class TestEntropy:
    def test_uniform(self):
        assert entropy([0.25] * 4) == pytest.approx(2.0, abs=1e-12)

    def test_point_mass(self):
        assert entropy([1.0, 0.0, 0.0]) == 0.0

    def test_near_uniform_bit_matches_taylor_expansion(self):
        delta = 1e-4
        # second-order expansion around 1/2: 1 - 2 delta^2 / ln 2
        expected = 1.0 - 2.0 * delta**2 / math.log(2)
        assert entropy([0.5 + delta, 0.5 - delta]) == pytest.approx(
            expected, abs=1e-15
        )

    def test_rejects_negative_mass(self):
        with pytest.raises(ValueError):
            entropy([1.1, -0.1])

    def test_clamps_float_dust(self):
        assert entropy([1.0 + 5e-16, -5e-16]) == 0.0


class TestMutualInformation:
    def test_product_joint(self):
        j = np.outer([0.3, 0.7], [0.6, 0.4])
        assert mutual_information(j) == pytest.approx(0.0, abs=1e-12)

    def test_perfect_bit_copy(self):
        j = np.array([[0.25, 0.0], [0.25, 0.0], [0.0, 0.25], [0.0, 0.25]])
        assert mutual_information(j) == pytest.approx(1.0, abs=1e-12)

    def test_bounded_by_marginal_entropies(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            j = random_joint(rng, (4, 2))
            mi = mutual_information(j)
            assert mi >= 0.0
            assert mi <= entropy(j.sum(axis=1)) + 1e-12
            assert mi <= entropy(j.sum(axis=0)) + 1e-12


class TestKLDivergence:
    def test_identical(self):
        assert kl_divergence([0.2, 0.8], [0.2, 0.8]) == 0.0

    def test_disjoint_support(self):
        assert kl_divergence([1.0, 0.0], [0.0, 1.0]) == math.inf

    def test_half_vs_quarter(self):
        expected = 0.5 + 0.5 * math.log2(2.0 / 3.0)  # = 0.20751874963942185
        assert kl_divergence([0.5, 0.5], [0.25, 0.75]) == pytest.approx(
            expected, abs=1e-14
        )

    def test_nonnegative_zero_iff_equal(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            p = rng.dirichlet(np.ones(4)) + 1e-6
            p /= p.sum()
            q = rng.dirichlet(np.ones(4)) + 1e-6
            q /= q.sum()
            d = kl_divergence(p, q)
            assert d >= 0.0
            if np.abs(p - q).max() <= 1e-12:
                assert d <= 1e-12
            assert kl_divergence(p, p) == 0.0


class TestChannelCapacity:
    def test_endpoints(self):
        assert channel_capacity(1.0) == 1.0
        assert channel_capacity(0.5) == pytest.approx(0.0, abs=1e-15)

    def test_near_useless_channel(self):
        # closed form at 1/2 + 1e-4, also matching 2 delta^2 / ln 2
        val = channel_capacity(0.5001)
        assert val == pytest.approx(2e-8 / math.log(2), rel=1e-3)

    def test_rejects_out_of_range(self):
        for bad in (0.4999, 1.0001, 0.0):
            with pytest.raises(ValueError):
                channel_capacity(bad)

    @given(st.floats(0.5, 1.0), st.floats(1e-12, 0.5))
    def test_monotone(self, p, bump):
        hi = min(p + bump, 1.0)
        if hi > p:
            assert channel_capacity(hi) >= channel_capacity(p)

    def test_monotone_on_grid(self):
        grid = np.linspace(0.5, 1.0, 101)
        vals = [channel_capacity(p) for p in grid]
        assert all(b > a for a, b in zip(vals, vals[1:]))


class TestThreeWayMI:
    def test_product(self):
        pa = np.array([0.1, 0.2, 0.3, 0.4])
        pbc = np.array([[0.3, 0.2], [0.1, 0.4]])
        t = pa[:, None, None] * pbc[None, :, :]
        assert three_way_mi(t) == pytest.approx(0.0, abs=1e-12)

    def test_full_copy_of_two_bits(self):
        t = np.zeros((4, 2, 2))
        for a in range(4):
            t[a, (a >> 1) & 1, a & 1] = 0.25
        assert three_way_mi(t) == pytest.approx(2.0, abs=1e-12)

    def test_duplicated_single_bit(self):
        t = np.zeros((4, 2, 2))
        for a in range(4):
            bit = (a >> 1) & 1
            t[a, bit, bit] = 0.25
        assert three_way_mi(t) == pytest.approx(1.0, abs=1e-12)

    def test_dominates_two_variable_marginals(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            t = random_joint(rng, (4, 2, 2))
            total = three_way_mi(t)
            assert total >= mutual_information(t.sum(axis=2)) - 1e-12
            assert total >= mutual_information(t.sum(axis=1)) - 1e-12
