"""Ground-truth solver: outcomes, distances, sweeps, kernel cross-checks."""

import json
import pathlib

import pytest

from imitation_nim.core import (
    GameParams,
    Move,
    Position,
    apply_move,
    initial_state,
    legal_moves,
)
from imitation_nim.oracle import (
    OracleSolver,
    key_to_state,
    solve,
    solve_with_core_rules,
    state_to_key,
    sweep,
)
from imitation_nim.wythoff import ResourceLimitError

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


class TestSolve:
    def test_full_nim_pair_is_n_when_imitation_capped(self):
        params = GameParams(2, 1)
        assert solve(initial_state(Position(2, 2), params), params).outcome == "N"

    def test_least_fixed_p_above_the_trivial_ones(self):
        params = GameParams(2, 1)
        assert solve(initial_state(Position(2, 3), params), params).outcome == "P"

    def test_wide_window_flips_small_pair(self):
        params = GameParams(1, 2)
        assert solve(initial_state(Position(1, 2), params), params).outcome == "N"

    def test_terminal_distance_zero(self):
        params = GameParams(1, 1)
        entry = solve(initial_state(Position(0, 0), params), params)
        assert (entry.outcome, entry.distance) == ("P", 0)

    def test_win_in_one(self):
        params = GameParams(1, 1)
        entry = solve(initial_state(Position(1, 1), params), params)
        assert entry.outcome == "N"
        assert entry.distance == 1  # move to (0,1); the reply is forbidden

    def test_distance_semantics(self):
        params = GameParams(1, 1)
        solver = OracleSolver(params, 16)
        state = initial_state(Position(2, 3), params)
        entry = solver.solve(state)
        children = [solver.solve(apply_move(state, m, params)) for m in legal_moves(state, params)]
        if entry.outcome == "N":
            assert entry.distance == 1 + min(c.distance for c in children if c.outcome == "P")
        else:
            assert entry.distance == 1 + max(c.distance for c in children)

    def test_bound_guard(self):
        params = GameParams(1, 1)
        solver = OracleSolver(params, 8)
        with pytest.raises(ResourceLimitError):
            solver.solve(initial_state(Position(9, 3), params))

    def test_label_swap_invariance(self):
        params = GameParams(3, 2)
        solver = OracleSolver(params, 12)
        for start in [(3, 7), (5, 5), (12, 4)]:
            state = initial_state(Position(*start), params)
            a = solver.solve(state)
            b = solver.solve(state.swapped())
            assert (a.outcome, a.distance) == (b.outcome, b.distance)


@pytest.mark.parametrize("p,m", [(1, 1), (2, 3), (3, 2)])
def test_fast_kernel_matches_rules_level_recursion(p, m):
    params = GameParams(p, m)
    solver = OracleSolver(params, 9)
    for x in range(10):
        for y in range(10):
            solver.solve(initial_state(Position(x, y), params))
    # every reachable state agrees with the no-shortcuts recursion
    for key in sorted(solver.memo):
        state = key_to_state(key)
        assert solver.memo[key][0] == solve_with_core_rules(state, params), key


def test_fast_kernel_reaches_exactly_the_rules_level_states():
    params = GameParams(2, 2)
    solver = OracleSolver(params, 7)
    for x in range(8):
        for y in range(8):
            solver.solve(initial_state(Position(x, y), params))
    seen = set()
    stack = []
    for x in range(8):
        for y in range(8):
            state = initial_state(Position(x, y), params)
            seen.add(state)
            stack.append(state)
    while stack:
        state = stack.pop()
        for move in legal_moves(state, params):
            nxt = apply_move(state, move, params)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    assert {state_to_key(s) for s in seen} == set(solver.memo)


def test_reachable_invariants_at_spec_scale():
    # full enumeration at piles <= 20 for p, m <= 3 via the kernel, which
    # test_fast_kernel_reaches_exactly_the_rules_level_states pins to the
    # rules-API closure
    for p in (1, 2, 3):
        for m in (1, 2, 3):
            params = GameParams(p, m)
            solver = OracleSolver(params, 20)
            for x in range(21):
                for y in range(21):
                    solver.solve(initial_state(Position(x, y), params))
            for x, y, target, base, cm, co in solver.memo:
                if target >= 0:
                    assert co == p - 1, (p, m, (x, y, target, base, cm, co))
                    mine = (x, y)[target]
                    other = (x, y)[1 - target]
                    assert mine > other
                assert p - 1 in (cm, co)


class TestSweep:
    @pytest.mark.parametrize("p,m,bound", [(1, 1, 25), (3, 2, 20), (3, 3, 15), (1, 2, 15)])
    def test_no_mismatches(self, p, m, bound):
        report = sweep(GameParams(p, m), bound)
        assert report.mismatches == []
        assert report.fresh_state_mismatches == []
        assert report.static_mismatches == []
        assert report.visited > 0

    def test_report_shape(self):
        report = sweep(GameParams(2, 1), 8)
        doc = report.to_json()
        assert doc["params"] == {"p": 2, "m": 1}
        assert doc["bound"] == 8
        assert doc["visited"] == report.visited
        assert doc["mismatches"] == []

    def test_golden_report(self):
        report = sweep(GameParams(2, 1), 8)
        expected = (FIXTURES / "sweep_p2_m1_bound8.json").read_text()
        assert report.to_json_text() == expected.strip()

    def test_determinism(self):
        a = sweep(GameParams(2, 2), 10).to_json_text()
        b = sweep(GameParams(2, 2), 10).to_json_text()
        assert a == b
