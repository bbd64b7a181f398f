"""Two-pile Nim with a bounded imitation budget: rules, tables, solver, checks."""

from .core import (
    DynamicState,
    GameParams,
    IllegalMoveError,
    Move,
    PendingImitation,
    Position,
    apply_move,
    initial_state,
    is_imitation,
    legal_moves,
)
from .strategy import (
    StaticClass,
    StaticKind,
    StaticReason,
    Verdict,
    best_move,
    classify,
    classify_static,
    fallback_move,
    option_credit,
)
from .wythoff import (
    CoverageError,
    ResourceLimitError,
    WythoffTable,
    check_bounds,
    closed_form_block,
    generate_table,
    table_covering,
    xi,
)
from .oracle import OracleEntry, OracleSolver, SweepReport, solve, sweep
from .beatty import (
    BeattyPair,
    beatty_pair,
    beatty_rows,
    comparison_sequences,
    table_involution,
    verify_involution_bounds,
)

__all__ = [
    "DynamicState",
    "GameParams",
    "IllegalMoveError",
    "Move",
    "PendingImitation",
    "Position",
    "apply_move",
    "initial_state",
    "is_imitation",
    "legal_moves",
    "StaticClass",
    "StaticKind",
    "StaticReason",
    "Verdict",
    "best_move",
    "classify",
    "classify_static",
    "fallback_move",
    "option_credit",
    "CoverageError",
    "ResourceLimitError",
    "WythoffTable",
    "check_bounds",
    "closed_form_block",
    "generate_table",
    "table_covering",
    "xi",
    "OracleEntry",
    "OracleSolver",
    "SweepReport",
    "solve",
    "sweep",
    "BeattyPair",
    "beatty_pair",
    "beatty_rows",
    "comparison_sequences",
    "table_involution",
    "verify_involution_bounds",
]

__version__ = "0.1.0"
