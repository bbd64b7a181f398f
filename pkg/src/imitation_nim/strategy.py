"""Exact win/loss classification of dynamic states, and winning-move selection.

A state is P (previous player wins) exactly when, with (a, b) the
canonical position and L the credit attached to the position on arrival
(credit_other):

  (I)  (a, b) is a table pair and its difference-class rank is <= L, or
  (II) the table pair (a, c) sharing first coordinate a has a <= c < b,
       and the reply reaching it would be an imitation whose remaining
       credit falls below the rank of (a, c).

Clause (II) is the trap: the opponent can see the winning reduction but
may not play it without overdrawing their imitation budget.  Everything
else is N, and some legal move then leads to a P state.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import (
    DynamicState,
    GameParams,
    Move,
    Position,
    apply_move,
    is_imitation,
    legal_moves,
)
from .wythoff import WythoffTable


class StrategyError(RuntimeError):
    """Internal inconsistency: a constructed winning move failed validation."""


@dataclass(frozen=True)
class Verdict:
    outcome: str  # "P" or "N"
    clause: Optional[str]  # "I" or "II" for P, None for N
    winning_move: Optional[Move]  # present iff outcome == "N" and one was requested


class StaticKind(Enum):
    NON_DYNAMIC_P = "NonDynamicP"
    NON_DYNAMIC_N = "NonDynamicN"
    DYNAMIC = "Dynamic"


class StaticReason(Enum):
    WYTHOFF_P_XI_ZERO = "WYTHOFF_P_XI_ZERO"  # table pair, first of its difference class
    P_WITH_POSITIVE_XI = "P_WITH_POSITIVE_XI"  # table pair with classmates below
    TRAP_BELOW = "TRAP_BELOW"  # off-table, but a row pair sits in [a, b)
    ROW_TRAP = "ROW_TRAP"  # off-table N, same-difference pair strictly below
    COLUMN_P_BELOW = "COLUMN_P_BELOW"  # off-table N, column pair strictly below
    NO_P_BELOW = "NO_P_BELOW"  # off-table N, no qualifying pair below at all


@dataclass(frozen=True)
class StaticClass:
    kind: StaticKind
    reason: StaticReason


def option_credit(state: DynamicState, move: Move, params: GameParams) -> int:
    """Credit the position reached by `move` would carry, in [-1, p-1].

    -1 encodes an imitation that would overdraw the budget; such a move is
    illegal to play but still meaningful to the classifier.
    """
    if is_imitation(state, move, params):
        return state.credit_mover - 1
    return params.p - 1


def _trap_option(state: DynamicState, table: WythoffTable) -> tuple[int, int, Move] | None:
    """The unique clause-(II) candidate: the table pair (a, c) with the
    canonical smaller coordinate as first coordinate and c < b, together
    with the move that reaches it.  None when no such pair exists."""
    a, b = state.position.canonical()
    if a == b:
        return None
    c = table.row_partner(a)
    if c is None or c >= b:
        return None
    larger = 0 if state.position.pile0 > state.position.pile1 else 1
    return a, c, Move(larger, b - c)


def classify(
    state: DynamicState,
    params: GameParams,
    table: WythoffTable,
    find_move: bool = True,
) -> Verdict:
    """P/N verdict for a dynamic state, with the witnessing clause.

    For N states a winning move is attached unless `find_move` is False
    (bulk sweeps skip it; it costs a scan over all options).
    """
    a, b = state.position.canonical()
    credit = state.credit_other
    if table.contains(a, b) and table.diff_rank(a, b) <= credit:
        return Verdict("P", "I", None)
    trap = _trap_option(state, table)
    if trap is not None:
        _, c, trap_move = trap
        if option_credit(state, trap_move, params) < table.diff_rank(a, c):
            return Verdict("P", "II", None)
    move = best_move_unchecked(state, params, table) if find_move else None
    return Verdict("N", None, move)


def best_move_unchecked(
    state: DynamicState, params: GameParams, table: WythoffTable
) -> Optional[Move]:
    """Winning move for an N state, or None if every option loses.

    All legal options are classified; among winners the one with the
    lexicographically smallest successor position is returned, which keeps
    output deterministic.
    """
    best: tuple[tuple[int, int], Move] | None = None
    for move in legal_moves(state, params):
        successor = apply_move(state, move, params)
        if classify(successor, params, table, find_move=False).outcome == "P":
            key = (successor.position.pile0, successor.position.pile1)
            if best is None or key < best[0]:
                best = (key, move)
    return None if best is None else best[1]


def best_move(state: DynamicState, params: GameParams, table: WythoffTable) -> Optional[Move]:
    """Winning move for an N state; None for a P state.

    The returned move is validated by re-classifying its successor; a
    failure there means the classifier contradicts itself and is raised
    as a hard error rather than masked.
    """
    verdict = classify(state, params, table, find_move=False)
    if verdict.outcome == "P":
        return None
    move = best_move_unchecked(state, params, table)
    if move is None:
        raise StrategyError(f"state {state} classified N but no option classifies P")
    successor = apply_move(state, move, params)
    check = classify(successor, params, table, find_move=False)
    if check.outcome != "P":
        raise StrategyError(f"winning move {move} from {state} leads to {check.outcome} state")
    return move


def fallback_move(
    state: DynamicState,
    params: GameParams,
    table: WythoffTable,
    oracle_bound: int = 40,
) -> Optional[Move]:
    """Move to play from a lost (P) state; None when no move exists.

    Small boards are played out exactly: the move maximising the plies the
    opponent still needs is chosen, preserving mistake opportunities the
    longest.  Larger boards fall back to the minimal single-token removal,
    preferring the larger pile and never imitating voluntarily.
    """
    options = legal_moves(state, params)
    if not options:
        return None
    if max(state.position.pile0, state.position.pile1) <= oracle_bound:
        from .oracle import OracleSolver  # local import; oracle depends on this module

        solver = OracleSolver(params, oracle_bound)
        best: tuple[tuple[int, tuple[int, int]], Move] | None = None
        for move in options:
            successor = apply_move(state, move, params)
            entry = solver.solve(successor)
            key = (-entry.distance, (successor.position.pile0, successor.position.pile1))
            if best is None or key < best[0]:
                best = (key, move)
        return best[1]
    larger = 0 if state.position.pile0 >= state.position.pile1 else 1
    preferred = [Move(larger, 1), Move(1 - larger, 1)]
    for move in preferred:
        if state.position.pile(move.pile) >= 1 and not is_imitation(state, move, params):
            if move in options:
                return move
    return options[0]


def classify_static(position: Position, params: GameParams, table: WythoffTable) -> StaticClass:
    """History-free classification of a bare position.

    Table pairs are non-dynamic P exactly when they head their difference
    class; other table pairs and off-table positions with a row pair in
    [a, b) are dynamic (their verdict depends on the arriving move); the
    rest are non-dynamic N, subdivided by what kind of pair sits below.
    """
    a, b = position.canonical()
    if table.contains(a, b):
        if table.diff_rank(a, b) == 0:
            return StaticClass(StaticKind.NON_DYNAMIC_P, StaticReason.WYTHOFF_P_XI_ZERO)
        return StaticClass(StaticKind.DYNAMIC, StaticReason.P_WITH_POSITIVE_XI)
    c = table.row_partner(a)
    if c is not None and a <= c < b:
        return StaticClass(StaticKind.DYNAMIC, StaticReason.TRAP_BELOW)
    if table.diff_rank(a, b) > 0:
        return StaticClass(StaticKind.NON_DYNAMIC_N, StaticReason.ROW_TRAP)
    if table.column_row_below(a) is not None:
        return StaticClass(StaticKind.NON_DYNAMIC_N, StaticReason.COLUMN_P_BELOW)
    return StaticClass(StaticKind.NON_DYNAMIC_N, StaticReason.NO_P_BELOW)
