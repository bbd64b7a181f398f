"""HTTP API contract: flows, error codes, analysis payloads, overlays."""

import json

import pytest
from fastapi.testclient import TestClient

from imitation_nim.service import create_app


@pytest.fixture()
def client():
    return TestClient(create_app(pile_cap=500))


def new_game(client, **kwargs):
    response = client.post("/api/games", json=kwargs)
    assert response.status_code == 200, response.text
    return response.json()


class TestCreate:
    def test_plain_session(self, client):
        view = new_game(client, p=2, m=1, a=2, b=2)
        assert view["position"] == {"pile0": 2, "pile1": 2}
        assert view["creditMover"] == view["creditOther"] == 1
        assert view["pending"] is None
        assert view["status"] == "ongoing"
        assert view["moves"] == []
        assert view["toMove"] == "first"

    def test_invalid_params(self, client):
        response = client.post("/api/games", json={"p": 0, "m": 1, "a": 2, "b": 2})
        assert response.status_code == 400
        body = response.json()
        assert body["code"] == "invalid_params"
        assert "message" in body

    def test_pile_cap(self, client):
        response = client.post("/api/games", json={"p": 1, "m": 1, "a": 501, "b": 2})
        assert response.status_code == 400
        assert response.json()["code"] == "invalid_params"

    def test_engine_first_replies_at_creation(self, client):
        view = new_game(client, p=1, m=1, a=2, b=3, engineSide="first")
        assert len(view["moves"]) == 1
        assert view["moves"][0] == {"player": "first", "pile": 0, "amount": 1, "imitation": False}
        assert view["position"] == {"pile0": 1, "pile1": 3}

    def test_engine_second_waits(self, client):
        view = new_game(client, p=3, m=2, a=20, b=27, engineSide="second")
        assert view["moves"] == []
        assert view["toMove"] == "first"

    def test_dead_start_is_finished(self, client):
        view = new_game(client, p=1, m=1, a=0, b=0)
        assert view["status"] == "finished"
        assert view["winner"] == "second"


class TestGet:
    def test_roundtrip_and_idempotence(self, client):
        view = new_game(client, p=2, m=2, a=4, b=6)
        a = client.get(f"/api/games/{view['id']}")
        b = client.get(f"/api/games/{view['id']}")
        assert a.status_code == 200
        assert a.json() == b.json() == view

    def test_unknown_session(self, client):
        response = client.get("/api/games/deadbeef")
        assert response.status_code == 404
        assert response.json()["code"] == "unknown_session"


class TestMoves:
    def test_full_narrated_line(self, client):
        # both seats human: (2,2) -> (1,2) -> (1,1) -> (0,1); the reply to
        # (0,1) would be a second consecutive imitation, so the game ends
        view = new_game(client, p=2, m=1, a=2, b=2)
        sid = view["id"]
        view = client.post(f"/api/games/{sid}/moves", json={"pile": 0, "amount": 1}).json()
        assert view["pending"] == {"target": 1, "base": 1}
        view = client.post(f"/api/games/{sid}/moves", json={"pile": 1, "amount": 1}).json()
        assert view["moves"][-1]["imitation"] is True
        assert view["creditOther"] == 0
        response = client.post(f"/api/games/{sid}/moves", json={"pile": 0, "amount": 1})
        view = response.json()
        assert view["status"] == "finished"
        assert view["winner"] == "first"
        assert view["position"] == {"pile0": 0, "pile1": 1}
        # the move that ended the game is rejected with the budget code
        response = client.post(f"/api/games/{sid}/moves", json={"pile": 1, "amount": 1})
        assert response.status_code == 400
        assert response.json()["code"] == "imitation_budget_exhausted"

    def test_illegal_amount(self, client):
        view = new_game(client, p=1, m=1, a=3, b=3)
        response = client.post(f"/api/games/{view['id']}/moves", json={"pile": 0, "amount": 5})
        assert response.status_code == 400
        assert response.json()["code"] == "illegal_amount"

    def test_engine_replies_in_line(self, client):
        view = new_game(client, p=1, m=1, a=4, b=7, engineSide="second")
        sid = view["id"]
        view = client.post(f"/api/games/{sid}/moves", json={"pile": 0, "amount": 1}).json()
        assert view["moves"][-1]["player"] == "second"
        assert view["toMove"] in (None, "first")

    def test_not_your_turn_when_engine_stalls(self, client, monkeypatch):
        # a stalled engine leaves the turn with the engine seat, which is
        # the only way the guard can fire given synchronous replies
        import imitation_nim.service as service_mod

        monkeypatch.setattr(service_mod, "best_move", lambda *a, **k: None)
        monkeypatch.setattr(service_mod, "fallback_move", lambda *a, **k: None)
        view = new_game(client, p=1, m=1, a=4, b=7, engineSide="second")
        sid = view["id"]
        view = client.post(f"/api/games/{sid}/moves", json={"pile": 0, "amount": 1}).json()
        assert view["toMove"] == "second"  # engine owes a move
        response = client.post(f"/api/games/{sid}/moves", json={"pile": 0, "amount": 1})
        assert response.status_code == 409
        assert response.json()["code"] == "not_your_turn"

    def test_malformed_pile(self, client):
        view = new_game(client, p=1, m=1, a=3, b=3)
        response = client.post(f"/api/games/{view['id']}/moves", json={"pile": 7, "amount": 1})
        assert response.status_code == 400
        assert response.json()["code"] == "invalid_params"


class TestAnalysis:
    def test_forbidden_and_verdict_after_trap(self, client):
        view = new_game(client, p=1, m=1, a=2, b=3)
        sid = view["id"]
        client.post(f"/api/games/{sid}/moves", json={"pile": 0, "amount": 1})
        doc = client.get(f"/api/games/{sid}/analysis").json()
        assert doc["position"] == {"pile0": 1, "pile1": 3}
        assert doc["forbiddenMoves"] == [{"pile": 1, "amount": 1}]
        assert doc["verdict"]["outcome"] == "P"
        assert doc["verdict"]["clause"] == "II"
        assert doc["pendingWindow"] == {"target": 1, "lo": 1, "hi": 1}

    def test_recommended_move_on_big_board(self, client):
        view = new_game(client, p=3, m=2, a=20, b=27, engineSide="second")
        doc = client.get(f"/api/games/{view['id']}/analysis").json()
        assert doc["verdict"]["outcome"] == "N"
        assert doc["recommendedMove"] == {"pile": 0, "amount": 3}

    def test_terminal_analysis(self, client):
        view = new_game(client, p=1, m=1, a=0, b=0)
        doc = client.get(f"/api/games/{view['id']}/analysis").json()
        assert doc["status"] == "finished"
        assert doc["legalMoves"] == []
        assert doc["recommendedMove"] is None

    def test_overlay_marks_extent_six(self, client):
        view = new_game(client, p=1, m=1, a=6, b=6)
        doc = client.get(f"/api/games/{view['id']}/analysis").json()
        overlays = doc["overlays"]
        assert overlays["extent"] == {"pile0": 6, "pile1": 6}
        assert overlays["wythoffP"] == [[0, 0], [1, 2], [2, 1], [3, 5], [5, 3]]
        grid = overlays["staticGrid"]
        assert grid[0][0] == "P"  # (0,0)
        assert grid[2][1] == "P"  # (1,2): x=1, y=2
        assert grid[3][1] == "D"  # (1,3) depends on history
        assert grid[3][2] == "a"  # (2,3) fixed N via the diagonal pair below
        assert grid[5][2] == "b"  # (2,5) fixed N via the column pair below

    def test_unknown_session(self, client):
        assert client.get("/api/games/na/analysis").status_code == 404


class TestMoveLog:
    def test_jsonl_log(self, tmp_path):
        log = tmp_path / "moves.jsonl"
        client = TestClient(create_app(move_log_path=str(log)))
        view = new_game(client, p=2, m=1, a=2, b=2)
        client.post(f"/api/games/{view['id']}/moves", json={"pile": 0, "amount": 1})
        lines = [json.loads(line) for line in log.read_text().splitlines()]
        assert len(lines) == 1
        assert lines[0]["pile"] == 0
        assert lines[0]["player"] == "first"
        assert lines[0]["session"] == view["id"]
