import pytest
from fastapi.testclient import TestClient

from conftest import PAPER_4X4_SOLUTION, load_fixture
from sudolyndon import puzzle_to_json
from sudolyndon.service import PuzzleStore, create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


@pytest.fixture(scope="module")
def paper_4x4_json():
    return puzzle_to_json(load_fixture("paper_4x4.sl"))


class TestHealth:
    def test_healthz(self, client):
        response = client.get("/healthz")
        assert response.status_code == 200
        assert response.json() == {"status": "ok"}


class TestSolveEndpoint:
    def test_paper_4x4(self, client, paper_4x4_json):
        response = client.post(
            "/api/v1/solve", json={"puzzle": paper_4x4_json, "cap": 2}
        )
        assert response.status_code == 200
        data = response.json()
        assert data["count"] == 1 and not data["truncated"]
        assert data["solutions"][0]["cells"] == list(PAPER_4X4_SOLUTION)

    def test_no_solution(self, client):
        payload = puzzle_to_json(load_fixture("paper_nosolution.sl"))
        response = client.post("/api/v1/solve", json={"puzzle": payload, "cap": 2})
        assert response.status_code == 200
        assert response.json()["count"] == 0

    def test_deterministic_responses(self, client, paper_4x4_json):
        body = {"puzzle": paper_4x4_json, "cap": 2}
        first = client.post("/api/v1/solve", json=body)
        second = client.post("/api/v1/solve", json=body)
        assert first.content == second.content

    def test_malformed_puzzle_400(self, client):
        response = client.post("/api/v1/solve", json={"puzzle": {"n": 2}, "cap": 2})
        assert response.status_code == 400

    def test_malformed_body_400(self, client):
        response = client.post("/api/v1/solve", json={"cap": 2})
        assert response.status_code == 400

    def test_budget_429(self, paper_4x4_json):
        tiny = TestClient(create_app(node_budget=2))
        empty = {
            "n": 6, "m": 6, "cells": ["......"] * 6, "variant": "base",
            "rowACounts": None, "colACounts": None,
            "boxRows": None, "boxCols": None, "forbiddenFactors": [],
        }
        response = tiny.post("/api/v1/solve", json={"puzzle": empty, "cap": 1000})
        assert response.status_code == 429


class TestPuzzleLifecycle:
    def test_create_fetch_check_hint_reveal(self, client):
        created = client.post(
            "/api/v1/puzzles", json={"n": 4, "m": 4, "variant": "base", "seed": 5}
        )
        assert created.status_code == 201
        body = created.json()
        puzzle_id = body["id"]
        puzzle = body["puzzle"]
        assert puzzle["n"] == 4 and len(puzzle["cells"]) == 4

        fetched = client.get(f"/api/v1/puzzles/{puzzle_id}")
        assert fetched.status_code == 200
        assert fetched.json()["puzzle"] == puzzle

        revealed = client.post(f"/api/v1/puzzles/{puzzle_id}/reveal", json={})
        assert revealed.status_code == 200
        solution = revealed.json()["solution"]["cells"]

        checked = client.post(
            f"/api/v1/puzzles/{puzzle_id}/check", json={"cells": solution}
        )
        assert checked.status_code == 200
        data = checked.json()
        assert data["solved"] is True
        assert all(l["status"] in ("altValid", "bltValid") for l in data["lines"])

        partial = [row[:2] + ".." for row in solution]
        checked = client.post(
            f"/api/v1/puzzles/{puzzle_id}/check", json={"cells": partial}
        )
        # Clue cells might sit in the blanked region; rebuild from the clues.
        if checked.status_code == 422:
            board = [list(r) for r in puzzle["cells"]]
            for i in range(4):
                for j in range(4):
                    if board[i][j] == "*":
                        board[i][j] = "."
            checked = client.post(
                f"/api/v1/puzzles/{puzzle_id}/check",
                json={"cells": ["".join(r) for r in board]},
            )
        assert checked.status_code == 200
        assert checked.json()["solved"] is False

        hinted = client.post(
            f"/api/v1/puzzles/{puzzle_id}/hint", json={"cells": puzzle["cells"]}
        )
        assert hinted.status_code == 200
        payload = hinted.json()
        if "rule" in payload:
            assert payload["assignments"]
            for a in payload["assignments"]:
                i, j = a["row"], a["col"]
                assert solution[i][j] == a["letter"]
        else:
            assert payload["status"] in ("exhausted", "contradiction")

    def test_created_with_same_seed_identical(self, client):
        body = {"n": 4, "m": 4, "seed": 77}
        first = client.post("/api/v1/puzzles", json=body).json()["puzzle"]
        second = client.post("/api/v1/puzzles", json=body).json()["puzzle"]
        assert first == second

    def test_unknown_id_404(self, client):
        assert client.get("/api/v1/puzzles/nope").status_code == 404
        assert (
            client.post("/api/v1/puzzles/nope/check", json={"cells": []}).status_code
            == 404
        )
        assert (
            client.post("/api/v1/puzzles/nope/hint", json={"cells": []}).status_code
            == 404
        )
        assert client.post("/api/v1/puzzles/nope/reveal", json={}).status_code == 404

    def test_clue_inconsistent_board_422(self, client):
        created = client.post("/api/v1/puzzles", json={"n": 4, "m": 4, "seed": 5})
        puzzle_id = created.json()["id"]
        cells = [list(r) for r in created.json()["puzzle"]["cells"]]
        clue = next(
            (i, j)
            for i in range(4)
            for j in range(4)
            if cells[i][j] in ("a", "b")
        )
        i, j = clue
        cells[i][j] = "a" if cells[i][j] == "b" else "b"
        response = client.post(
            f"/api/v1/puzzles/{puzzle_id}/check",
            json={"cells": ["".join(r) for r in cells]},
        )
        assert response.status_code == 422

    def test_bad_board_shape_400(self, client):
        created = client.post("/api/v1/puzzles", json={"n": 4, "m": 4, "seed": 5})
        puzzle_id = created.json()["id"]
        response = client.post(
            f"/api/v1/puzzles/{puzzle_id}/check", json={"cells": ["ab"]}
        )
        assert response.status_code == 400
        response = client.post(
            f"/api/v1/puzzles/{puzzle_id}/check", json={"cells": ["abcd"] * 4}
        )
        assert response.status_code == 400

    def test_create_rejects_silly_dims(self, client):
        assert (
            client.post("/api/v1/puzzles", json={"n": 0, "m": 4}).status_code == 400
        )
        assert (
            client.post("/api/v1/puzzles", json={"n": 40, "m": 4}).status_code == 400
        )


class TestStore:
    def test_ttl_eviction(self):
        now = [0.0]
        store = PuzzleStore(ttl_seconds=10, clock=lambda: now[0])
        from sudolyndon import GenConfig, generate

        generated = generate(GenConfig(2, 2, seed=1))
        item = store.put(generated.puzzle, generated.solution)
        assert store.get(item.id) is not None
        now[0] = 11.0
        assert store.get(item.id) is None
