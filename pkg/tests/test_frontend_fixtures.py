"""Keep the recorded frontend fixtures in sync with the live service,
and pin the browser-replayed line to the CLI replay of the same moves."""

import json
import pathlib
import sys

import pytest

from imitation_nim.core import GameParams, Move, Position, apply_move, initial_state, legal_moves

ROOT = pathlib.Path(__file__).resolve().parents[1]
FIXDIR = ROOT / "frontend" / "tests" / "fixtures"

sys.path.insert(0, str(ROOT / "tools"))
import record_fixtures  # noqa: E402


@pytest.mark.parametrize("name", sorted(record_fixtures.FIXTURES))
def test_fixture_matches_live_service(name):
    stored = json.loads((FIXDIR / name).read_text())
    fresh = record_fixtures.FIXTURES[name]()
    assert stored == json.loads(json.dumps(fresh)), f"{name} drifted; re-run tools/record_fixtures.py"


def test_recorded_line_equals_cli_replay():
    # the browser line and the command-line replay derive the same end state
    exchanges = json.loads((FIXDIR / "example_line.json").read_text())
    final_view = exchanges[-2]["response"]
    assert final_view["status"] == "finished"

    params = GameParams(2, 1)
    state = initial_state(Position(2, 2), params)
    for pile, amount in [(0, 1), (1, 1), (0, 1)]:
        state = apply_move(state, Move(pile, amount), params)
    assert final_view["position"] == {"pile0": state.position.pile0, "pile1": state.position.pile1}
    assert final_view["pending"] == {
        "target": state.pending.target,
        "base": state.pending.base,
    }
    assert final_view["creditMover"] == state.credit_mover
    assert final_view["creditOther"] == state.credit_other
    # three moves made, the mover has no reply: the last mover won
    assert legal_moves(state, params) == []
    assert final_view["winner"] == "first"
