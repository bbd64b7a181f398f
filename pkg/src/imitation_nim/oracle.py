"""Exhaustive ground-truth solver over the full dynamic state space.

Normal play: a player with no legal move loses, which can happen with
tokens still on the table when the reply window forbids every removal.
Outcomes are computed by memoised recursion; `sweep` then replays the
classifier over every state reachable from any starting position inside
a box and reports disagreements.  An empty mismatch list is the
strongest correctness statement this package makes.

The sweep kernel works on plain integer tuples for speed; its agreement
with a direct recursion over the rules API is itself under test, so the
two routes (rules-level solver vs classifier) stay independent.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field

from .core import (
    DynamicState,
    GameParams,
    Move,
    PendingImitation,
    Position,
    apply_move,
    initial_state,
    legal_moves,
)
from .strategy import classify, classify_static, StaticKind
from .wythoff import ResourceLimitError, WythoffTable, table_covering

# state tuple: (x, y, target, base, credit_mover, credit_other); target -1 = no window
StateKey = tuple[int, int, int, int, int, int]


def state_to_key(state: DynamicState) -> StateKey:
    pend = state.pending
    target, base = (pend.target, pend.base) if pend is not None else (-1, 0)
    return (
        state.position.pile0,
        state.position.pile1,
        target,
        base,
        state.credit_mover,
        state.credit_other,
    )


def key_to_state(key: StateKey) -> DynamicState:
    x, y, target, base, cm, co = key
    pend = PendingImitation(target, base) if target >= 0 else None
    return DynamicState(Position(x, y), pend, cm, co)


@dataclass(frozen=True)
class OracleEntry:
    """Exact outcome of a state: P/N plus plies to the end under optimal
    play (winner hurries, loser stalls)."""

    key: StateKey
    outcome: str
    distance: int


def _ensure_recursion_room(tokens: int) -> None:
    need = tokens + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


class OracleSolver:
    """Memoised solver for one parameter pair within a pile bound.

    The memo is keyed by the full state tuple (position, window, both
    credits), the smallest key under which the game is Markovian.  A
    solved memo may be read concurrently; writes happen only inside
    `solve` calls.
    """

    def __init__(self, params: GameParams, pile_bound: int) -> None:
        self.params = params
        self.bound = pile_bound
        self.memo: dict[StateKey, tuple[str, int]] = {}

    def solve(self, state: DynamicState) -> OracleEntry:
        key = state_to_key(state)
        if max(key[0], key[1]) > self.bound:
            raise ResourceLimitError(
                f"position {key[:2]} exceeds oracle pile bound {self.bound}"
            )
        _ensure_recursion_room(key[0] + key[1])
        outcome, distance = self._solve(key)
        return OracleEntry(key, outcome, distance)

    def _solve(self, key: StateKey) -> tuple[str, int]:
        memo = self.memo
        hit = memo.get(key)
        if hit is not None:
            return hit
        p = self.params.p
        m = self.params.m
        x, y, target, base, cm, co = key
        hi = base + m - 1
        best_n: int | None = None  # min distance over P successors
        worst = -1  # max distance over all successors
        for pile, mine, theirs in ((0, x, y), (1, y, x)):
            imitable = pile == target
            opens = mine <= theirs
            for amount in range(1, mine + 1):
                imit = imitable and base <= amount <= hi
                if imit and cm == 0:
                    continue
                if pile == 0:
                    child = (
                        x - amount,
                        y,
                        1 if opens else -1,
                        amount if opens else 0,
                        co,
                        cm - 1 if imit else p - 1,
                    )
                else:
                    child = (
                        x,
                        y - amount,
                        0 if opens else -1,
                        amount if opens else 0,
                        co,
                        cm - 1 if imit else p - 1,
                    )
                sub = memo.get(child)
                if sub is None:
                    sub = self._solve(child)
                outcome, dist = sub
                if outcome == "P" and (best_n is None or dist < best_n):
                    best_n = dist
                if dist > worst:
                    worst = dist
        if best_n is not None:
            result = ("N", best_n + 1)
        elif worst >= 0:
            result = ("P", worst + 1)
        else:
            result = ("P", 0)  # no legal move at all: the mover has lost
        memo[key] = result
        return result


def solve(state: DynamicState, params: GameParams, pile_bound: int = 64) -> OracleEntry:
    """One-shot exact solve of a single state."""
    return OracleSolver(params, pile_bound).solve(state)


def solve_with_core_rules(state: DynamicState, params: GameParams) -> str:
    """Reference outcome computed straight over the rules API.

    Slow; exists so tests can pin the fast kernel against an
    implementation with no shortcuts.
    """
    memo: dict[DynamicState, str] = {}
    _ensure_recursion_room(state.position.total)

    def go(s: DynamicState) -> str:
        hit = memo.get(s)
        if hit is not None:
            return hit
        result = "P"
        for move in legal_moves(s, params):
            if go(apply_move(s, move, params)) == "P":
                result = "N"
        memo[s] = result
        return result

    return go(state)


@dataclass
class Mismatch:
    key: StateKey
    oracle: str
    classifier: str

    def to_json(self) -> dict:
        x, y, target, base, cm, co = self.key
        pending = {"target": target, "base": base} if target >= 0 else None
        return {
            "state": {
                "position": {"pile0": x, "pile1": y},
                "pending": pending,
                "creditMover": cm,
                "creditOther": co,
            },
            "oracle": self.oracle,
            "classifier": self.classifier,
        }


@dataclass
class SweepReport:
    """Everything a verification sweep learned about one parameter pair."""

    params: GameParams
    bound: int
    visited: int
    mismatches: list[Mismatch]
    fresh_state_mismatches: list[tuple[int, int]] = field(default_factory=list)
    static_mismatches: list[tuple[int, int]] = field(default_factory=list)
    dynamic_but_constant: int = 0  # dynamic positions with one reachable outcome (data only)

    @property
    def ok(self) -> bool:
        return not (self.mismatches or self.fresh_state_mismatches or self.static_mismatches)

    def to_json(self) -> dict:
        return {
            "params": {"p": self.params.p, "m": self.params.m},
            "bound": self.bound,
            "visited": self.visited,
            "mismatches": [m.to_json() for m in self.mismatches],
            "freshStateMismatches": [list(c) for c in self.fresh_state_mismatches],
            "staticMismatches": [list(c) for c in self.static_mismatches],
            "dynamicButConstant": self.dynamic_but_constant,
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"), sort_keys=True)


def sweep(params: GameParams, pile_bound: int, table: WythoffTable | None = None) -> SweepReport:
    """Solve every state reachable from every start in the box and compare.

    Checks, per state: oracle outcome == classifier outcome.  Per starting
    position: fresh verdict == table membership.  Per position: when the
    history-free classification claims a fixed outcome, every reachable
    history agrees.  Reachability is by forward closure from the starts;
    unreachable credit/window combinations are never asserted about.
    """
    if table is None:
        table = table_covering(params, pile_bound + 1)
    solver = OracleSolver(params, pile_bound)
    _ensure_recursion_room(2 * pile_bound)
    for x in range(pile_bound + 1):
        for y in range(pile_bound + 1):
            solver._solve((x, y, -1, 0, params.p - 1, params.p - 1))

    mismatches: list[Mismatch] = []
    outcomes_by_position: dict[tuple[int, int], set[str]] = {}
    for key, (outcome, _dist) in solver.memo.items():
        got = classify(key_to_state(key), params, table, find_move=False).outcome
        if got != outcome:
            mismatches.append(Mismatch(key, outcome, got))
        outcomes_by_position.setdefault((key[0], key[1]), set()).add(outcome)

    fresh_bad: list[tuple[int, int]] = []
    for x in range(pile_bound + 1):
        for y in range(pile_bound + 1):
            fresh = solver.memo[(x, y, -1, 0, params.p - 1, params.p - 1)][0]
            member = table.contains(*Position(x, y).canonical())
            if (fresh == "P") != member:
                fresh_bad.append((x, y))

    static_bad: list[tuple[int, int]] = []
    dynamic_constant = 0
    for (x, y), seen in outcomes_by_position.items():
        cls = classify_static(Position(x, y), params, table)
        if cls.kind is StaticKind.NON_DYNAMIC_P and seen != {"P"}:
            static_bad.append((x, y))
        elif cls.kind is StaticKind.NON_DYNAMIC_N and seen != {"N"}:
            static_bad.append((x, y))
        elif cls.kind is StaticKind.DYNAMIC and len(seen) == 1:
            dynamic_constant += 1

    return SweepReport(
        params,
        pile_bound,
        len(solver.memo),
        sorted(mismatches, key=lambda m: m.key),
        sorted(fresh_bad),
        sorted(static_bad),
        dynamic_constant,
    )
