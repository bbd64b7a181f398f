"""Rules of two-pile Nim with a bounded imitation budget.

The game is ordinary two-pile Nim with one restriction.  Whenever a
player removes x tokens from the weakly shorter pile (either pile when
they are equal), a reply window [x, x+m-1] opens on the other pile: a
removal of y tokens from that pile with y in the window counts as an
*imitation* of the previous move.  No player may imitate on p
consecutive moves of their own, so each player carries a chain credit
that starts at p-1, drops by one per imitation, and resets to p-1 on
any non-imitating move.

Everything here is an immutable value; operations are pure functions,
so states can be hashed, memoised and shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional


class IllegalMoveError(ValueError):
    """A move that the rules reject, tagged with a machine-readable code."""

    def __init__(self, code: str, message: str) -> None:
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class GameParams:
    """Rule constants: p bounds the imitation chain, m the reply window width."""

    p: int
    m: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.m < 1:
            raise ValueError(f"p and m must be positive, got p={self.p}, m={self.m}")


@dataclass(frozen=True)
class Position:
    """An ordered pair of pile heights; labels matter, (2,3) != (3,2)."""

    pile0: int
    pile1: int

    def __post_init__(self) -> None:
        if self.pile0 < 0 or self.pile1 < 0:
            raise ValueError(f"pile heights must be non-negative: {self}")

    def pile(self, label: int) -> int:
        if label == 0:
            return self.pile0
        if label == 1:
            return self.pile1
        raise ValueError(f"pile label must be 0 or 1, got {label}")

    def canonical(self) -> tuple[int, int]:
        """(min, max) view used for classification; play itself keeps labels."""
        return (self.pile0, self.pile1) if self.pile0 <= self.pile1 else (self.pile1, self.pile0)

    def swapped(self) -> "Position":
        return Position(self.pile1, self.pile0)

    @property
    def total(self) -> int:
        return self.pile0 + self.pile1


@dataclass(frozen=True)
class Move:
    """Remove `amount` tokens from pile `pile`."""

    pile: int
    amount: int

    def __post_init__(self) -> None:
        if self.pile not in (0, 1):
            raise ValueError(f"pile label must be 0 or 1, got {self.pile}")
        if self.amount < 1:
            raise ValueError(f"amount must be positive, got {self.amount}")


@dataclass(frozen=True)
class PendingImitation:
    """Open reply window: the previous player took `base` tokens from the
    weakly shorter pile, so removals of [base, base+m-1] from `target`
    imitate that move.  `target` is always the strictly larger pile of the
    resulting position."""

    target: int
    base: int

    def __post_init__(self) -> None:
        if self.target not in (0, 1):
            raise ValueError(f"target must be 0 or 1, got {self.target}")
        if self.base < 1:
            raise ValueError(f"base must be positive, got {self.base}")


@dataclass(frozen=True)
class DynamicState:
    """Position plus the memory the rules need: the open reply window (if
    any) and both players' chain credits.

    credit_mover is the credit of the player about to move; credit_other
    is the credit of the player who just moved, which is also the credit
    value attached to the current position itself.  Stored credits stay in
    [0, p-1]; -1 only ever appears as a hypothetical option value inside
    the classifier.
    """

    position: Position
    pending: Optional[PendingImitation]
    credit_mover: int
    credit_other: int

    def swapped(self) -> "DynamicState":
        pend = self.pending
        if pend is not None:
            pend = PendingImitation(1 - pend.target, pend.base)
        return DynamicState(self.position.swapped(), pend, self.credit_mover, self.credit_other)


def initial_state(position: Position, params: GameParams) -> DynamicState:
    """Fresh game: no reply window, both chain credits at the maximum p-1."""
    return DynamicState(position, None, params.p - 1, params.p - 1)


def _check_well_formed(state: DynamicState, move: Move) -> None:
    height = state.position.pile(move.pile)
    if not 1 <= move.amount <= height:
        raise IllegalMoveError(
            "illegal_amount",
            f"cannot remove {move.amount} from pile{move.pile} holding {height}",
        )


def is_imitation(state: DynamicState, move: Move, params: GameParams) -> bool:
    """True iff `move` answers the open reply window.

    Requires a pending window, removal from the window's target pile and
    an amount within [base, base+m-1].  With no window open nothing is an
    imitation.
    """
    _check_well_formed(state, move)
    pend = state.pending
    return (
        pend is not None
        and move.pile == pend.target
        and pend.base <= move.amount <= pend.base + params.m - 1
    )


def moves_from(position: Position) -> Iterator[Move]:
    """All Nim removals, pile 0 first, amounts ascending."""
    for label in (0, 1):
        for amount in range(1, position.pile(label) + 1):
            yield Move(label, amount)


def legal_moves(state: DynamicState, params: GameParams) -> list[Move]:
    """Every Nim removal except imitations when the mover's credit is spent.

    An empty list means the player to move loses (normal play); this can
    happen with tokens still on the table when the window swallows every
    removal from the only non-empty pile.
    """
    out = []
    for move in moves_from(state.position):
        if state.credit_mover == 0 and is_imitation(state, move, params):
            continue
        out.append(move)
    return out


def apply_move(state: DynamicState, move: Move, params: GameParams) -> DynamicState:
    """Play `move`, returning the successor state.

    A removal from the weakly shorter pile (either pile when equal) opens
    a reply window on the other pile; any other removal closes it.  The
    mover's credit drops by one if the move imitates, else resets to p-1,
    and the two players' credits swap roles.  Chains of the two players
    never interleave because an imitation always removes from the strictly
    larger pile and therefore never opens a window of its own.
    """
    _check_well_formed(state, move)
    imitating = is_imitation(state, move, params)
    if imitating and state.credit_mover == 0:
        raise IllegalMoveError(
            "imitation_budget_exhausted",
            f"removing {move.amount} from pile{move.pile} imitates the previous move "
            f"(window [{state.pending.base}, {state.pending.base + params.m - 1}]) "
            "and the imitation budget is exhausted",
        )
    here = state.position.pile(move.pile)
    other = state.position.pile(1 - move.pile)
    if move.pile == 0:
        new_position = Position(here - move.amount, other)
    else:
        new_position = Position(other, here - move.amount)
    pending = PendingImitation(1 - move.pile, move.amount) if here <= other else None
    credit_other = state.credit_mover - 1 if imitating else params.p - 1
    return DynamicState(new_position, pending, state.credit_other, credit_other)
