"""Greedy pair table for the blocking variant of Wythoff's game.

Row n of the table is (a_n, b_n) with

    a_n = mex { a_i, b_i : 0 <= i < n }        b_n = a_n + floor(n/p) * m

Generated with a linear-time used-number sieve.  The first coordinates
are strictly increasing, the two coordinate streams partition the
covered integers (with a_i = b_i = i for i < p), and every positive
pile difference that occurs is a multiple of m occurring exactly p
times.  The table doubles as the P-position set the strategy module
classifies against.
"""

from __future__ import annotations

import io
import json
from bisect import bisect_left
from dataclasses import dataclass, field

from .core import GameParams, Position
from .surd import cmp_linear_sqrt, floor_quadratic

DEFAULT_MAX_ROWS = 10_000_000


class CoverageError(ValueError):
    """The table is too short to answer the query; generate more rows."""


class ResourceLimitError(RuntimeError):
    """A requested computation exceeds the configured resource cap."""


def delta(n: int, params: GameParams) -> int:
    """Pile difference assigned to row n."""
    return (n // params.p) * params.m


@dataclass(frozen=True)
class AlphaBeta:
    """Asymptotic slopes of the two table coordinates: beta = alpha + m/p."""

    alpha: float
    beta: float


def alpha_beta(params: GameParams) -> AlphaBeta:
    p, m = params.p, params.m
    alpha = (2 * p - m + (m * m + 4 * p * p) ** 0.5) / (2 * p)
    return AlphaBeta(alpha, alpha + m / p)


@dataclass
class WythoffTable:
    """Indexed prefix of the greedy pair table.

    `pairs[n]` is (a_n, b_n).  `row_by_a` maps a first coordinate to its
    row, `row_by_b` a second coordinate to its row, and `diff_index[d]`
    lists the first coordinates of the difference-d rows in increasing
    order.  A completed table is immutable in spirit: nothing mutates it
    after generation, so it is safe to share across threads.
    """

    params: GameParams
    pairs: list[tuple[int, int]]
    row_by_a: dict[int, int] = field(repr=False)
    row_by_b: dict[int, int] = field(repr=False)
    diff_index: dict[int, list[int]] = field(repr=False)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def max_a(self) -> int:
        return self.pairs[-1][0]

    def _require_value(self, a: int) -> None:
        # every integer <= max_a has appeared in the prefix, so lookups of
        # smaller values are authoritative
        if a > self.max_a:
            raise CoverageError(
                f"table covers values up to {self.max_a}; "
                f"query at {a} needs a larger table"
            )

    def contains(self, a: int, b: int) -> bool:
        """Membership of the canonical pair (a, b), a <= b."""
        self._require_value(a)
        n = self.row_by_a.get(a)
        return n is not None and self.pairs[n][1] == b

    def diff_rank(self, a: int, b: int) -> int:
        """Number of table pairs with difference b-a and first coordinate < a.

        For a table row this is its rank within its difference class (so it
        is < p); for any canonical pair it lies in [0, p].
        """
        if b < a:
            a, b = b, a
        # needs every row with first coordinate < a, i.e. a <= max_a + 1
        if a > self.max_a + 1:
            raise CoverageError(
                f"rank at first coordinate {a} exceeds table coverage {self.max_a}"
            )
        return bisect_left(self.diff_index.get(b - a, ()), a)

    def row_partner(self, a: int) -> int | None:
        """b_n for the row with first coordinate a, or None if a is never
        a first coordinate."""
        self._require_value(a)
        n = self.row_by_a.get(a)
        return None if n is None else self.pairs[n][1]

    def column_row_below(self, a: int) -> int | None:
        """First coordinate c < a of a row (c, a), or None."""
        self._require_value(a)
        n = self.row_by_b.get(a)
        if n is None:
            return None
        c = self.pairs[n][0]
        return c if c < a else None


def _build_indexes(params: GameParams, pairs: list[tuple[int, int]]) -> WythoffTable:
    row_by_a = {a: n for n, (a, _) in enumerate(pairs)}
    row_by_b: dict[int, int] = {}
    diff_index: dict[int, list[int]] = {}
    for n, (a, b) in enumerate(pairs):
        row_by_b.setdefault(b, n)
        diff_index.setdefault(b - a, []).append(a)
    return WythoffTable(params, pairs, row_by_a, row_by_b, diff_index)


def generate_table(params: GameParams, count: int, max_rows: int = DEFAULT_MAX_ROWS) -> WythoffTable:
    """First `count` rows of the greedy pair table via a used-number sieve."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if count > max_rows:
        raise ResourceLimitError(f"{count} rows exceed the cap of {max_rows}")
    p, m = params.p, params.m
    # a_n <= n*alpha and alpha <= 1 + m/p, so this capacity estimate is safe;
    # grown anyway if a b coordinate lands beyond it.
    used = bytearray(count * (2 + m // p) + m + 64)
    pairs: list[tuple[int, int]] = []
    mex = 0
    for n in range(count):
        while used[mex]:
            mex += 1
        a = mex
        b = a + (n // p) * m
        if b >= len(used):
            used.extend(bytearray(b - len(used) + 65))
        if n >= p and used[b]:  # cannot happen; guards the sieve itself
            raise AssertionError(f"sieve collision at row {n}: b={b} already used")
        used[a] = 1
        used[b] = 1
        pairs.append((a, b))
    return _build_indexes(params, pairs)


def table_covering(params: GameParams, height: int, max_rows: int = DEFAULT_MAX_ROWS) -> WythoffTable:
    """Smallest table prefix whose first coordinates pass `height`.

    Every integer <= height then appears somewhere in the table, and all
    membership / rank queries with first coordinate <= height are covered.
    """
    p, m = params.p, params.m
    used = bytearray(4 * (height + 1) + 4 * m + 64)
    pairs: list[tuple[int, int]] = []
    mex = 0
    n = 0
    while True:
        while used[mex]:
            mex += 1
        a = mex
        b = a + (n // p) * m
        if b >= len(used):
            used.extend(bytearray(b - len(used) + 65))
        used[a] = 1
        used[b] = 1
        pairs.append((a, b))
        n += 1
        if a > height:
            break
        if n > max_rows:
            raise ResourceLimitError(f"coverage of height {height} exceeds row cap {max_rows}")
    return _build_indexes(params, pairs)


def xi(position: Position, table: WythoffTable) -> int:
    """Rank statistic of a position: table pairs sharing its pile
    difference with a smaller first coordinate."""
    a, b = position.canonical()
    return table.diff_rank(a, b)


def closed_form_block(params: GameParams, count: int) -> list[tuple[int, int]]:
    """Direct construction of the table available exactly when p divides m.

    Blocks of p consecutive shifts of the scaled (1, m/p) Beatty-like
    pairs reproduce the sieve output row for row.
    """
    p, m = params.p, params.m
    if m % p != 0:
        raise ValueError(f"closed form requires p | m, got p={p}, m={m}")
    if count < 1:
        raise ValueError("count must be >= 1")
    m1 = m // p
    disc = m1 * m1 + 4  # never a perfect square
    out: list[tuple[int, int]] = []
    n = 0
    while len(out) < count:
        # floor(n * alpha') with alpha' = (2 - m1 + sqrt(m1^2 + 4)) / 2
        a1 = floor_quadratic(n * (2 - m1), n * n * disc, 2)
        b1 = a1 + n * m1
        for j in range(p):
            out.append((p * a1 + j, p * b1 + j))
            if len(out) == count:
                break
        n += 1
    return out


@dataclass
class BoundReport:
    """Outcome of sweeping the two-sided growth bounds over a table prefix.

    Violations hold (n, coordinate, side) triples and are expected to be
    empty; max observed |a_n - n*alpha| and |b_n - n*beta| are recorded as
    data, not asserted.
    """

    params: GameParams
    rows_checked: int
    violations: list[tuple[int, str, str]]
    max_dev_a: float
    max_dev_b: float

    @property
    def ok(self) -> bool:
        return not self.violations


def check_bounds(params: GameParams, table: WythoffTable) -> BoundReport:
    """Verify floor((n-p+1)*alpha) <= a_n <= floor(n*alpha) and the beta
    analogue for every row, with exact integer floors.

    The upper side is equivalent to a_n <= n*alpha since a_n is an integer.
    The lower side must be read through the floor: at p = 1 the two-sided
    bound would otherwise force a_n = n*alpha exactly, which no integer
    sequence satisfies (there a_n = floor(n*alpha), attaining both ends).
    alpha = (2p - m + sqrt(D)) / 2p and beta = (2p + m + sqrt(D)) / 2p with
    D = m^2 + 4p^2; D may be a perfect square (e.g. p=2, m=3), which the
    floor helper handles exactly.
    """
    p, m = params.p, params.m
    disc = m * m + 4 * p * p
    ab = alpha_beta(params)
    violations: list[tuple[int, str, str]] = []
    max_dev_a = 0.0
    max_dev_b = 0.0
    for n, (a, b) in enumerate(table.pairs):
        t = n - p + 1
        if a > floor_quadratic(n * (2 * p - m), n * n * disc, 2 * p):
            violations.append((n, "a", "upper"))
        # for t <= 0 the lower bound is non-positive and trivially holds
        if t > 0 and a < floor_quadratic(t * (2 * p - m), t * t * disc, 2 * p):
            violations.append((n, "a", "lower"))
        if b > floor_quadratic(n * (2 * p + m), n * n * disc, 2 * p):
            violations.append((n, "b", "upper"))
        if t > 0 and b < floor_quadratic(t * (2 * p + m), t * t * disc, 2 * p):
            violations.append((n, "b", "lower"))
        max_dev_a = max(max_dev_a, abs(a - n * ab.alpha))
        max_dev_b = max(max_dev_b, abs(b - n * ab.beta))
    return BoundReport(params, len(table.pairs), violations, max_dev_a, max_dev_b)


def table_to_csv(table: WythoffTable) -> str:
    """CSV export with header n,a,b,delta; integer text only."""
    buf = io.StringIO()
    buf.write("n,a,b,delta\n")
    for n, (a, b) in enumerate(table.pairs):
        buf.write(f"{n},{a},{b},{b - a}\n")
    return buf.getvalue()


def table_to_json(table: WythoffTable) -> str:
    """JSON export: array of {n, a, b}."""
    rows = [{"n": n, "a": a, "b": b} for n, (a, b) in enumerate(table.pairs)]
    return json.dumps(rows, separators=(",", ":"))
