#!/usr/bin/env python3
"""Record HTTP exchanges from the live service into frontend test fixtures.

Each fixture is an ordered list of exchanges {method, path, body, status,
response}; the frontend's fake fetch consumes them in order, so the tests
prove the client issues exactly these requests and renders exactly these
payloads.  Session ids are normalised to the literal "SID" so recordings
are stable.  A companion pytest module re-runs these flows and fails if
the stored fixtures drift from the service.

Run from the repository root:  python3 tools/record_fixtures.py
"""

from __future__ import annotations

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from fastapi.testclient import TestClient  # noqa: E402

from imitation_nim.service import create_app  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parents[1] / "frontend" / "tests" / "fixtures"


class Recorder:
    def __init__(self) -> None:
        self.client = TestClient(create_app(pile_cap=500))
        self.exchanges: list[dict] = []
        self.session_id: str | None = None

    def _normalise(self, value):
        if isinstance(value, dict):
            return {
                k: ("SID" if k == "id" and v == self.session_id else self._normalise(v))
                for k, v in value.items()
            }
        if isinstance(value, list):
            return [self._normalise(v) for v in value]
        return value

    def call(self, method: str, path: str, body: dict | None = None) -> dict:
        real_path = path.replace("SID", self.session_id or "SID")
        if method == "POST":
            response = self.client.post(real_path, json=body)
        else:
            response = self.client.get(real_path)
        payload = response.json()
        if self.session_id is None and isinstance(payload, dict) and "id" in payload:
            self.session_id = payload["id"]
        self.exchanges.append(
            {
                "method": method,
                "path": path,
                "body": body,
                "status": response.status_code,
                "response": self._normalise(payload),
            }
        )
        return payload


def build_example_line() -> list[dict]:
    """The narrated (2,2) line at p=2, m=1, both seats driven from the browser."""
    rec = Recorder()
    rec.call("POST", "/api/games", {"p": 2, "m": 1, "a": 2, "b": 2, "engineSide": "none"})
    rec.call("GET", "/api/games/SID/analysis")
    rec.call("POST", "/api/games/SID/moves", {"pile": 0, "amount": 1})
    rec.call("GET", "/api/games/SID/analysis")
    rec.call("POST", "/api/games/SID/moves", {"pile": 1, "amount": 1})
    rec.call("GET", "/api/games/SID/analysis")
    rec.call("POST", "/api/games/SID/moves", {"pile": 0, "amount": 1})
    rec.call("GET", "/api/games/SID/analysis")
    return rec.exchanges


def build_trap_analysis() -> list[dict]:
    """(2,3) at p=1, m=1: after the reduction the window bars (1,1); the
    barred attempt is recorded as the 400 the client must surface inline."""
    rec = Recorder()
    rec.call("POST", "/api/games", {"p": 1, "m": 1, "a": 2, "b": 3, "engineSide": "none"})
    rec.call("GET", "/api/games/SID/analysis")
    rec.call("POST", "/api/games/SID/moves", {"pile": 0, "amount": 1})
    rec.call("GET", "/api/games/SID/analysis")
    rec.call("POST", "/api/games/SID/moves", {"pile": 1, "amount": 1})  # 400
    return rec.exchanges


def build_overlay_small() -> list[dict]:
    rec = Recorder()
    rec.call("POST", "/api/games", {"p": 1, "m": 1, "a": 6, "b": 6, "engineSide": "none"})
    rec.call("GET", "/api/games/SID/analysis")
    return rec.exchanges


def build_engine_reply() -> list[dict]:
    """(20,27) at p=3, m=2 against the engine: the winning reduction is
    accepted and the engine's reply arrives inside the same response."""
    rec = Recorder()
    rec.call("POST", "/api/games", {"p": 3, "m": 2, "a": 20, "b": 27, "engineSide": "second"})
    rec.call("GET", "/api/games/SID/analysis")
    rec.call("POST", "/api/games/SID/moves", {"pile": 0, "amount": 3})
    rec.call("GET", "/api/games/SID/analysis")
    return rec.exchanges


FIXTURES = {
    "example_line.json": build_example_line,
    "trap_analysis.json": build_trap_analysis,
    "overlay_small.json": build_overlay_small,
    "engine_reply.json": build_engine_reply,
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for name, build in FIXTURES.items():
        target = OUT / name
        target.write_text(json.dumps(build(), indent=2, sort_keys=True) + "\n")
        print(f"wrote {target}")


if __name__ == "__main__":
    main()
