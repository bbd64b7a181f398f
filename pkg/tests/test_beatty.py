"""Beatty floors, the table involution, and the comparison report."""

import numpy as np
import pytest

from imitation_nim.beatty import (
    beatty_lower,
    beatty_pair,
    beatty_rows,
    beatty_upper,
    comparison_sequences,
    shifted_involution,
    table_involution,
    verify_involution_bounds,
)
from imitation_nim.core import GameParams
from imitation_nim.wythoff import generate_table


class TestBeattyPair:
    @pytest.mark.parametrize("p", [1, 2, 3, 7, 10])
    def test_complementary_slopes(self, p):
        pair = beatty_pair(p)
        assert pair.r < pair.s
        assert 1 / pair.r + 1 / pair.s == pytest.approx(1.0, abs=1e-12)
        assert pair.s == pytest.approx(pair.r + 1 / p)

    def test_lower_slope_window(self):
        # r sits in (3/2, 2), so the first index is always 1
        for p in range(1, 60):
            assert 1.5 < beatty_pair(p).r < 2
            assert beatty_lower(p, 1) == 1


class TestFloors:
    def test_golden_ratio_values(self):
        assert [beatty_lower(1, k) for k in (1, 2, 3)] == [1, 3, 4]
        assert [beatty_upper(1, k) for k in (1, 2, 3)] == [2, 5, 7]

    def test_vector_matches_scalar(self):
        for p in (1, 2, 5, 10):
            lo, hi = beatty_rows(p, 500)
            for k in (1, 7, 499):
                assert lo[k - 1] == beatty_lower(p, k)
                assert hi[k - 1] == beatty_upper(p, k)

    def test_precision_independence(self):
        import mpmath

        mpmath.mp.dps = 60
        for p in (1, 3, 9):
            root = mpmath.sqrt(4 * p * p + 1)
            r = ((2 * p - 1) + root) / (2 * p)
            s = r + mpmath.mpf(1) / p
            for k in (1, 2, 10, 999, 10**5):
                assert beatty_lower(p, k) == int(mpmath.floor(k * r))
                assert beatty_upper(p, k) == int(mpmath.floor(k * s))

    @pytest.mark.parametrize("p", [1, 2, 4, 10])
    def test_two_streams_partition_the_integers(self, p):
        k = 100_000
        lo, hi = beatty_rows(p, k)
        prefix = int(lo[-1])  # everything below the lower stream's frontier
        values = np.concatenate([lo, hi])
        values = values[values <= prefix]
        assert len(values) == prefix
        assert len(np.unique(values)) == prefix
        assert values.min() == 1

    def test_floor_swap_is_an_involution(self):
        # the pairing floor(kr) <-> floor(ks) never collides
        p = 3
        lo, hi = beatty_rows(p, 5000)
        swap = {}
        for a, b in zip(lo.tolist(), hi.tolist()):
            assert a not in swap and b not in swap
            swap[a] = b
            swap[b] = a
        for a, b in list(swap.items())[:200]:
            assert swap[b] == a


class TestTableInvolution:
    def test_small_goldens(self):
        inv = table_involution(1, 10)
        assert [inv[n] for n in (1, 2, 3, 4)] == [1, 3, 2, 6]

    @pytest.mark.parametrize("p", [1, 2, 3, 5])
    def test_is_an_involution_with_p_fixed_points(self, p):
        inv = table_involution(p, 300)
        for n in range(1, 301):
            assert inv[inv[n]] == n
        for n in range(1, p + 1):
            assert inv[n] == n
        assert inv[p + 1] != p + 1

    def test_matches_table_rows(self):
        p = 2
        inv = table_involution(p, 100)
        table = generate_table(GameParams(p, 1), 40)
        for a, b in table.pairs:
            assert inv[a + 1] == b + 1
            assert inv[b + 1] == a + 1

    def test_shift_bridge(self):
        p = 3
        full, shifted = shifted_involution(p, 50)
        for n in range(1, 51):
            assert shifted[n] + p == full[n + p]


class TestComparisonSequences:
    def test_upward_points_and_their_images_partition(self):
        p = 2
        seqs = comparison_sequences(p, 300)
        ups = set(seqs.a_inv.tolist())
        downs = set(seqs.b_inv.tolist())
        assert not ups & downs
        # the image list coincides with the increasing listing of the
        # complement, as far as both are complete
        span = 2 * 300 + 2 * p + 8
        _, shifted = shifted_involution(p, span)
        complement = [n for n in range(1, span + 1) if shifted[n] <= n]
        horizon = int(seqs.b_inv[200])
        lhs = [v for v in seqs.b_inv.tolist() if v <= horizon]
        rhs = [v for v in complement if v <= horizon]
        assert lhs == rhs

    def test_zero_deviation_at_p1(self):
        seqs = comparison_sequences(1, 2000)
        assert np.array_equal(seqs.a_inv, seqs.a_beatty)
        assert np.array_equal(seqs.b_inv, seqs.b_beatty)
        assert not seqs.eps.any()


class TestReport:
    @pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
    def test_all_checks_pass(self, p):
        report = verify_involution_bounds(p, 2000)
        assert report.passed
        assert report.max_abs_dev <= p - 1
        assert set(report.epsilon_set) <= {-1, 0, 1, 2}

    def test_p1_has_no_deviation(self):
        assert verify_involution_bounds(1, 3000).max_abs_dev == 0

    def test_json_shape(self):
        doc = verify_involution_bounds(2, 500).to_json()
        assert doc["p"] == 2
        assert doc["K"] == 500
        assert set(doc["lemma1"]) == {"countExcess", "epsValues", "epsMod", "lowerSteps", "upperSteps"}
        assert "maxDeviation" in doc["mainTheorem"]
        assert "epsilonSet" in doc["corollary12"]
