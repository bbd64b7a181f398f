"""Beatty-pair sequences, the table-derived involution, and bound checks.

For each p >= 1 the slopes

    r = ((2p-1) + sqrt(4p^2+1)) / 2p        s = r + 1/p

form a Beatty pair (1/r + 1/s = 1, both irrational), so floor(k*r) and
floor(k*s) partition the positive integers.  Independently, the (p, 1)
pair table induces an involution of the positive integers by pairing
a_i+1 with b_i+1.  This module builds both sides, compares them, and
verifies that the involution's lower sequence never drifts more than
p-1 away from the Beatty one, with the companion step/count facts that
comparison rests on.  All floors go through exact integer arithmetic.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .core import GameParams
from .surd import floor_quadratic, floor_quadratic_vec
from .wythoff import CoverageError, table_covering


@dataclass(frozen=True)
class BeattyPair:
    """Complementary slope pair: 1/r + 1/s = 1 with r < s."""

    r: float
    s: float


def beatty_pair(p: int) -> BeattyPair:
    if p < 1:
        raise ValueError("p must be positive")
    root = math.sqrt(4 * p * p + 1)
    r = ((2 * p - 1) + root) / (2 * p)
    return BeattyPair(r, r + 1 / p)


def beatty_lower(p: int, k: int) -> int:
    """floor(k * r) for the family slope r, exact."""
    return floor_quadratic(k * (2 * p - 1), k * k * (4 * p * p + 1), 2 * p)


def beatty_upper(p: int, k: int) -> int:
    """floor(k * s) for the family slope s = r + 1/p, exact."""
    return floor_quadratic(k * (2 * p + 1), k * k * (4 * p * p + 1), 2 * p)


def beatty_rows(p: int, kmax: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised (floor(k*r), floor(k*s)) for k = 1..kmax."""
    if p < 1 or kmax < 1:
        raise ValueError("p and kmax must be positive")
    k = np.arange(1, kmax + 1, dtype=np.int64)
    disc = 4 * p * p + 1
    b = k * k * disc
    lower = floor_quadratic_vec(k * (2 * p - 1), b, 2 * p)
    upper = floor_quadratic_vec(k * (2 * p + 1), b, 2 * p)
    return lower, upper


def table_involution(p: int, n_max: int) -> dict[int, int]:
    """Involution of [1, ...] induced by the (p, 1) pair table.

    Row (a, b) pairs a+1 with b+1 (rows with a = b give fixed points, so
    n maps to n for n = 1..p).  Every integer in [1, n_max] gets an image;
    partners above n_max are included so the map stays an involution on
    its domain.
    """
    table = table_covering(GameParams(p, 1), n_max)
    out: dict[int, int] = {}
    for a, b in table.pairs:
        out[a + 1] = b + 1
        out[b + 1] = a + 1
    return out


def shifted_involution(p: int, n_max: int) -> tuple[dict[int, int], dict[int, int]]:
    """(full involution, its positive-part shift) with the shift defined by
    shifted(n) = full(n + p) - p on [1, n_max]."""
    full = table_involution(p, n_max + p)
    shifted = {n: full[n + p] - p for n in range(1, n_max + 1)}
    return full, shifted


@dataclass
class ComparisonSequences:
    """Both sides of the comparison, index-aligned for k = 1..K.

    a_inv/b_inv come from the shifted involution (a_inv lists the points
    mapped upward, b_inv their images); a_beatty/b_beatty are the exact
    Beatty floors; eps[k] is the gap difference (b_inv-a_inv)-(b_beatty-
    a_beatty) at index k.
    """

    p: int
    K: int
    a_inv: np.ndarray
    b_inv: np.ndarray
    a_beatty: np.ndarray
    b_beatty: np.ndarray
    eps: np.ndarray


def _involution_side(p: int, K: int) -> tuple[dict[int, int], dict[int, int], np.ndarray, np.ndarray]:
    """Full and shifted involutions plus the shifted map's first K upward
    points and their images.  The lower slope is below 2, so index K lives
    well inside a span of 2K plus slack."""
    span = 2 * K + 2 * p + 8
    full, shifted = shifted_involution(p, span)
    a_inv_list = [n for n in range(1, span + 1) if shifted[n] > n]
    if len(a_inv_list) < K:
        raise CoverageError(f"involution span {span} yields only {len(a_inv_list)} rows")
    a_inv = np.array(a_inv_list[:K], dtype=np.int64)
    b_inv = np.array([shifted[int(n)] for n in a_inv], dtype=np.int64)
    return full, shifted, a_inv, b_inv


def comparison_sequences(p: int, K: int) -> ComparisonSequences:
    if p < 1 or K < 1:
        raise ValueError("p and K must be positive")
    _, _, a_inv, b_inv = _involution_side(p, K)
    a_beatty, b_beatty = beatty_rows(p, K)
    eps = (b_inv - a_inv) - (b_beatty - a_beatty)
    return ComparisonSequences(p, K, a_inv, b_inv, a_beatty, b_beatty, eps)


@dataclass
class InvolutionBoundsReport:
    """Verification record for one (p, K).

    The five step/count facts and the deviation bound are provable over
    the whole range, so any False here means an implementation bug; the
    observed epsilon set is data, with a conjectured value of {0, 1} that
    is reported but never asserted.
    """

    p: int
    K: int
    count_excess_ok: bool
    eps_values_ok: bool
    eps_mod_ok: bool
    lower_steps_ok: bool
    upper_steps_ok: bool
    max_abs_dev: int
    membership_ok: bool
    epsilon_set: list[int]

    @property
    def dev_ok(self) -> bool:
        return self.max_abs_dev <= self.p - 1

    @property
    def passed(self) -> bool:
        return (
            self.count_excess_ok
            and self.eps_values_ok
            and self.eps_mod_ok
            and self.lower_steps_ok
            and self.upper_steps_ok
            and self.dev_ok
            and self.membership_ok
        )

    @property
    def epsilon_within_conjecture(self) -> bool:
        return set(self.epsilon_set) <= {0, 1}

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "K": self.K,
            "lemma1": {
                "countExcess": self.count_excess_ok,
                "epsValues": self.eps_values_ok,
                "epsMod": self.eps_mod_ok,
                "lowerSteps": self.lower_steps_ok,
                "upperSteps": self.upper_steps_ok,
            },
            "mainTheorem": {
                "maxDeviation": self.max_abs_dev,
                "bound": self.p - 1,
                "ok": self.dev_ok,
            },
            "corollary12": {
                "epsilonSet": self.epsilon_set,
                "ok": self.membership_ok,
                "withinConjecture": self.epsilon_within_conjecture,
            },
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"), sort_keys=True)


def verify_involution_bounds(p: int, K: int) -> InvolutionBoundsReport:
    """Run every check for one p at range K.

    Checked facts: the multiset of Beatty gaps never over- or under-counts
    the p-per-value ideal by more than p-1; eps is 0/1 and never 1 at
    indexes divisible by p; lower-sequence steps are 1/2 with no two
    consecutive 1s; upper steps are 2/3; the involution's lower sequence
    stays within p-1 of the Beatty one; and every involution image sits
    within -1..+2 of one of the two slope floors.
    """
    if p < 1 or K < 1:
        raise ValueError("p and K must be positive")
    full, shifted, a_inv, b_inv = _involution_side(p, K)
    a_beatty, b_beatty = beatty_rows(p, K)
    seqs = ComparisonSequences(
        p, K, a_inv, b_inv, a_beatty, b_beatty, (b_inv - a_inv) - (b_beatty - a_beatty)
    )
    k = np.arange(1, K + 1, dtype=np.int64)

    eps_values_ok = bool(np.isin(seqs.eps, (0, 1)).all())
    eps_mod_ok = bool(((seqs.eps != 1) | (k % p != 0)).all())

    da = np.diff(seqs.a_beatty)
    db = np.diff(seqs.b_beatty)
    lower_steps_ok = bool(np.isin(da, (1, 2)).all()) and not bool(
        ((da[:-1] == 1) & (da[1:] == 1)).any()
    )
    upper_steps_ok = bool(np.isin(db, (2, 3)).all())

    max_abs_dev = int(np.abs(seqs.a_inv - seqs.a_beatty).max())

    # gap counting: the k-th gap is about k/p, so indexes up to p(K+1)+2p
    # are guaranteed to exhaust every gap value <= K
    kbig = p * (K + 1) + 2 * p
    lo_big, hi_big = beatty_rows(p, kbig)
    gaps = hi_big - lo_big
    if not (np.diff(gaps) >= 0).all():
        raise AssertionError("Beatty gap sequence is not monotone")
    if int(gaps[-1]) <= K:
        raise CoverageError("gap range too short; increase kbig")
    counts = np.searchsorted(gaps, k, side="right")
    excess = counts - p * k
    count_excess_ok = bool(((excess >= 0) & (excess <= p - 1)).all())

    # membership of the unshifted involution against both slope floors
    up_points = {n for n, image in shifted.items() if image > n}
    n = np.arange(1, K + 1, dtype=np.int64)
    disc = 4 * p * p + 1
    b = n * n * disc
    floor_hi = floor_quadratic_vec(n, b, 2 * p)  # floor(n * (1+sqrt(disc))/2p)
    floor_lo = floor_quadratic_vec(-n, b, 2 * p)  # floor of n over that slope
    image = np.array([full[int(i)] for i in n], dtype=np.int64)
    dev_hi = image - floor_hi
    dev_lo = image - floor_lo
    membership_ok = bool(
        (((dev_hi >= -1) & (dev_hi <= 2)) | ((dev_lo >= -1) & (dev_lo <= 2))).all()
    )
    hi_side = (n <= p) | np.array([int(i) - p in up_points for i in n])
    observed = np.where(hi_side, dev_hi, dev_lo)
    epsilon_set = sorted(int(v) for v in np.unique(observed))

    return InvolutionBoundsReport(
        p,
        K,
        count_excess_ok,
        eps_values_ok,
        eps_mod_ok,
        lower_steps_ok,
        upper_steps_ok,
        max_abs_dev,
        membership_ok,
        epsilon_set,
    )
