"""Command-line front door: tables, classification, verification, play.

Exit status contract: 0 success, 1 verification found a mismatch or a
failed check, 2 usage or malformed input, 3 resource cap exceeded.
Output for a fixed invocation is byte-identical run to run.
"""

from __future__ import annotations

import argparse
import json
import sys

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
    moves_from,
)
from .beatty import verify_involution_bounds
from .oracle import sweep
from .strategy import best_move, classify, classify_static, fallback_move
from .wythoff import (
    CoverageError,
    ResourceLimitError,
    generate_table,
    table_covering,
    table_to_csv,
    table_to_json,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _parse_position(text: str) -> Position:
    try:
        a, b = text.split(",")
        return Position(int(a), int(b))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad position {text!r}, expected e.g. 2,3") from exc


def _parse_pile(text: str) -> int:
    if text in ("0", "pile0"):
        return 0
    if text in ("1", "pile1"):
        return 1
    raise UsageError(f"bad pile label {text!r}, expected pile0 or pile1")


class UsageError(Exception):
    pass


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


# ---------------------------------------------------------------- table


def cmd_table(args: argparse.Namespace) -> int:
    params = GameParams(args.p, args.m)
    table = generate_table(params, args.rows)
    if args.format == "csv":
        out = table_to_csv(table)
    elif args.format == "json":
        out = table_to_json(table) + "\n"
    else:
        lines = ["n a b delta"]
        lines += [f"{n} {a} {b} {b - a}" for n, (a, b) in enumerate(table.pairs)]
        out = "\n".join(lines) + "\n"
    _write_output(out, args.out)
    return EXIT_OK


# ---------------------------------------------------------------- classify


def _state_from_flags(args: argparse.Namespace, params: GameParams) -> DynamicState:
    if args.replay is not None:
        return _state_from_replay(args.replay, params)
    if args.pos is None:
        raise UsageError("--pos is required unless --replay is given")
    position = _parse_position(args.pos)
    pending = None
    if args.pending is not None:
        try:
            pile_text, base_text = args.pending.split(":")
            pending = PendingImitation(_parse_pile(pile_text), int(base_text))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad --pending {args.pending!r}, expected e.g. pile1:1") from exc
    credit_mover = args.credit if args.credit is not None else params.p - 1
    credit_other = args.credit_other if args.credit_other is not None else params.p - 1
    for name, value in (("--credit", credit_mover), ("--credit-other", credit_other)):
        if not 0 <= value <= params.p - 1:
            raise UsageError(f"{name} must be in [0, {params.p - 1}], got {value}")
    if pending is not None and credit_other != params.p - 1:
        # a pending window always comes from a non-imitating move
        raise UsageError("a state with a pending window must have --credit-other p-1")
    return DynamicState(position, pending, credit_mover, credit_other)


def _state_from_replay(replay_text: str, params: GameParams) -> DynamicState:
    parts = replay_text.split(";")
    state = initial_state(_parse_position(parts[0]), params)
    for token in parts[1:]:
        if not token:
            continue
        try:
            pile_text, amount_text = token.split(":")
            move = Move(_parse_pile(pile_text), int(amount_text))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad replay move {token!r}, expected pile:amount") from exc
        legal = legal_moves(state, params)
        if move not in legal:
            raise UsageError(
                f"replay move {token!r} is illegal at position "
                f"({state.position.pile0},{state.position.pile1})"
            )
        state = apply_move(state, move, params)
    return state


def _describe_history(state: DynamicState, params: GameParams) -> str:
    if state.pending is None and state.credit_mover == state.credit_other == params.p - 1:
        return "fresh"
    parts = []
    if state.pending is not None:
        lo = state.pending.base
        parts.append(f"pending pile{state.pending.target} window [{lo},{lo + params.m - 1}]")
    parts.append(f"credits mover={state.credit_mover} other={state.credit_other}")
    return "; ".join(parts)


def cmd_classify(args: argparse.Namespace) -> int:
    params = GameParams(args.p, args.m)
    state = _state_from_flags(args, params)
    position = state.position
    table = table_covering(params, max(position.pile0, position.pile1) + 1)
    verdict = classify(state, params, table)
    static = classify_static(position, params, table)
    if args.format == "json":
        pend = state.pending
        doc = {
            "p": params.p,
            "m": params.m,
            "position": {"pile0": position.pile0, "pile1": position.pile1},
            "state": {
                "pending": None if pend is None else {"target": pend.target, "base": pend.base},
                "creditMover": state.credit_mover,
                "creditOther": state.credit_other,
            },
            "static": {"kind": static.kind.value, "reason": static.reason.value},
            "verdict": {
                "outcome": verdict.outcome,
                "clause": verdict.clause,
                "winningMove": None
                if verdict.winning_move is None
                else {"pile": verdict.winning_move.pile, "amount": verdict.winning_move.amount},
            },
        }
        _write_output(json.dumps(doc, separators=(",", ":"), sort_keys=True) + "\n", args.out)
        return EXIT_OK
    lines = [
        f"position ({position.pile0},{position.pile1}) p={params.p} m={params.m}",
        f"history: {_describe_history(state, params)}",
        f"static: {static.kind.value} [{static.reason.value}]",
    ]
    if verdict.outcome == "P":
        lines.append(f"verdict: P (clause {verdict.clause})")
    else:
        lines.append("verdict: N")
        move = verdict.winning_move
        if move is not None:
            after = apply_move(state, move, params).position
            lines.append(
                f"winning move: remove {move.amount} from pile{move.pile} "
                f"-> ({after.pile0},{after.pile1})"
            )
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------- verify


def cmd_verify(args: argparse.Namespace) -> int:
    params = GameParams(args.p, args.m)
    report = sweep(params, args.bound)
    if args.format == "json":
        _write_output(report.to_json_text() + "\n", args.out)
    else:
        lines = [
            f"p={params.p} m={params.m} bound={args.bound}: "
            f"visited={report.visited} mismatches={len(report.mismatches)} "
            f"fresh={len(report.fresh_state_mismatches)} "
            f"static={len(report.static_mismatches)}",
        ]
        for mismatch in report.mismatches[:20]:
            lines.append(f"  MISMATCH {mismatch.key}: oracle={mismatch.oracle} classifier={mismatch.classifier}")
        lines.append("result: OK" if report.ok else "result: MISMATCH")
        _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_MISMATCH


# ---------------------------------------------------------------- beatty


def cmd_beatty(args: argparse.Namespace) -> int:
    report = verify_involution_bounds(args.p, args.K)
    if not report.epsilon_within_conjecture:
        eps = ",".join(str(v) for v in report.epsilon_set)
        sys.stderr.write(f"warning: observed epsilon set {{{eps}}} exceeds the conjectured {{0,1}}\n")
    if args.format == "json":
        _write_output(report.to_json_text() + "\n", args.out)
    else:
        flag = lambda ok: "OK" if ok else "FAIL"  # noqa: E731
        eps = ",".join(str(v) for v in report.epsilon_set)
        lines = [
            f"p={report.p} K={report.K}: "
            f"gap-count {flag(report.count_excess_ok)}, "
            f"eps-values {flag(report.eps_values_ok)}, "
            f"eps-mod {flag(report.eps_mod_ok)}, "
            f"lower-steps {flag(report.lower_steps_ok)}, "
            f"upper-steps {flag(report.upper_steps_ok)}, "
            f"max-deviation {report.max_abs_dev} (bound {report.p - 1}), "
            f"membership {flag(report.membership_ok)}, "
            f"epsilon set {{{eps}}}",
            "result: OK" if report.passed else "result: FAIL",
        ]
        _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_MISMATCH


# ---------------------------------------------------------------- play


def _render_state(state: DynamicState, params: GameParams) -> str:
    pos = state.position
    lines = [
        f"position: pile0={pos.pile0} pile1={pos.pile1}",
        f"credits: you={state.credit_mover} opponent={state.credit_other}",
    ]
    if state.pending is not None:
        lo = state.pending.base
        lines.append(
            f"reply window: removing {lo}..{lo + params.m - 1} from "
            f"pile{state.pending.target} imitates"
        )
    forbidden = [
        move
        for move in moves_from(pos)
        if state.credit_mover == 0 and is_imitation(state, move, params)
    ]
    if forbidden:
        lines.append(
            "forbidden: " + ", ".join(f"pile{m.pile}-{m.amount}" for m in forbidden)
        )
    return "\n".join(lines)


def cmd_play(args: argparse.Namespace) -> int:
    params = GameParams(args.p, args.m)
    position = _parse_position(args.pos)
    table = table_covering(params, max(position.pile0, position.pile1) + 1)
    state = initial_state(position, params)
    seats = ("first", "second")
    engine = args.engine
    print(f"imitation nim p={params.p} m={params.m} from ({position.pile0},{position.pile1})")
    ply = 0
    while True:
        mover = seats[ply % 2]
        options = legal_moves(state, params)
        if not options:
            winner = seats[(ply + 1) % 2]
            print(f"no legal moves for {mover}; {winner} wins")
            return EXIT_OK
        print(f"--- {mover} to move ---")
        print(_render_state(state, params))
        if engine == mover:
            move = best_move(state, params, table)
            if move is None:
                move = fallback_move(state, params, table)
            print(f"engine removes {move.amount} from pile{move.pile}")
        else:
            move = _read_move(state, params)
            if move is None:
                print("bye")
                return EXIT_OK
        state = apply_move(state, move, params)
        ply += 1


def _read_move(state: DynamicState, params: GameParams) -> Move | None:
    while True:
        sys.stdout.write("move (pile amount, or q)> ")
        sys.stdout.flush()
        line = sys.stdin.readline()
        if not line or line.strip() in ("q", "quit"):
            return None
        try:
            pile_text, amount_text = line.split()
            move = Move(_parse_pile(pile_text), int(amount_text))
        except (ValueError, UsageError):
            print("could not parse; try e.g. '0 2'")
            continue
        try:
            if state.credit_mover == 0 and is_imitation(state, move, params):
                print("that imitates the previous move and your budget is spent")
                continue
        except IllegalMoveError as exc:
            print(str(exc))
            continue
        return move


# ---------------------------------------------------------------- serve


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(pile_cap=args.pile_cap, move_log_path=args.log_file, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="imitation-nim",
        description="engine, solver and verification workbench for imitation-restricted two-pile nim",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="generate the pair table")
    table.add_argument("--p", type=int, required=True)
    table.add_argument("--m", type=int, required=True)
    table.add_argument("--rows", type=int, required=True)
    table.add_argument("--format", choices=("csv", "json", "text"), default="text")
    table.add_argument("--out")
    table.set_defaults(func=cmd_table)

    cls = sub.add_parser("classify", help="classify a position, optionally with history")
    cls.add_argument("--p", type=int, required=True)
    cls.add_argument("--m", type=int, required=True)
    cls.add_argument("--pos", help="position as a,b")
    cls.add_argument("--pending", help="open reply window as pile:base, e.g. pile1:1")
    cls.add_argument("--credit", type=int, help="mover's chain credit (default p-1)")
    cls.add_argument("--credit-other", type=int, dest="credit_other", help="previous player's credit")
    cls.add_argument("--replay", help='derive the state by replaying "a,b;pile:amt;..."')
    cls.add_argument("--format", choices=("text", "json"), default="text")
    cls.add_argument("--out")
    cls.set_defaults(func=cmd_classify)

    ver = sub.add_parser("verify", help="oracle sweep vs classifier over a box")
    ver.add_argument("--p", type=int, required=True)
    ver.add_argument("--m", type=int, required=True)
    ver.add_argument("--bound", type=int, required=True)
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.add_argument("--out")
    ver.set_defaults(func=cmd_verify)

    bea = sub.add_parser("beatty", help="sequence comparison and bound verification")
    bea.add_argument("--p", type=int, required=True)
    bea.add_argument("--K", type=int, required=True)
    bea.add_argument("--format", choices=("text", "json"), default="text")
    bea.add_argument("--out")
    bea.set_defaults(func=cmd_beatty)

    play = sub.add_parser("play", help="interactive terminal match")
    play.add_argument("--p", type=int, required=True)
    play.add_argument("--m", type=int, required=True)
    play.add_argument("--pos", required=True)
    play.add_argument("--engine", choices=("first", "second", "none"), default="second")
    play.set_defaults(func=cmd_play)

    serve = sub.add_parser("serve", help="start the HTTP game service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--pile-cap", type=int, default=500, dest="pile_cap")
    serve.add_argument("--log-file", dest="log_file")
    serve.add_argument("--ui-dir", dest="ui_dir")
    serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except IllegalMoveError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (ResourceLimitError, CoverageError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
