"""Record real service responses as JSON fixtures for the UI tests.

Run from the repository root:  python3 frontend/scripts/record_fixtures.py
"""

import json
import warnings
from pathlib import Path

from fastapi.testclient import TestClient

from sudolyndon import parse_puzzle, solve
from sudolyndon.grid import DegenerateGridWarning
from sudolyndon.service import PuzzleStore, create_app

ROOT = Path(__file__).resolve().parent.parent.parent
OUT = ROOT / "frontend" / "tests" / "fixtures"


def load(name):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateGridWarning)
        return parse_puzzle((ROOT / "fixtures" / name).read_bytes())


def main():
    store = PuzzleStore()
    client = TestClient(create_app(store=store))

    paper = load("paper_4x4.sl")
    hint_row = load("hint_r2.sl")
    paper_item = store.put(paper, solve(paper, cap=2).solutions[0])
    hint_item = store.put(hint_row, solve(hint_row, cap=2).solutions[0])

    records = {}

    records["paper4x4.puzzle"] = client.get(f"/api/v1/puzzles/{paper_item.id}").json()
    solution = ["aabb", "aabb", "bbaa", "bbaa"]
    records["paper4x4.check_solved"] = client.post(
        f"/api/v1/puzzles/{paper_item.id}/check", json={"cells": solution}
    ).json()
    records["paper4x4.check_initial"] = client.post(
        f"/api/v1/puzzles/{paper_item.id}/check", json={"cells": list(paper.cells)}
    ).json()
    records["paper4x4.hint_initial"] = client.post(
        f"/api/v1/puzzles/{paper_item.id}/hint", json={"cells": list(paper.cells)}
    ).json()
    records["paper4x4.hint_solved"] = client.post(
        f"/api/v1/puzzles/{paper_item.id}/hint", json={"cells": solution}
    ).json()
    records["paper4x4.reveal"] = client.post(
        f"/api/v1/puzzles/{paper_item.id}/reveal", json={}
    ).json()
    bad = [row for row in paper.cells]
    bad[1] = ".bb."  # contradicts the clue a at row 2, col 2
    response = client.post(f"/api/v1/puzzles/{paper_item.id}/check", json={"cells": bad})
    records["paper4x4.check_conflict"] = {
        "status": response.status_code,
        "body": response.json(),
    }

    records["hintrow.puzzle"] = client.get(f"/api/v1/puzzles/{hint_item.id}").json()
    records["hintrow.hint"] = client.post(
        f"/api/v1/puzzles/{hint_item.id}/hint", json={"cells": list(hint_row.cells)}
    ).json()

    OUT.mkdir(parents=True, exist_ok=True)
    for name, payload in records.items():
        path = OUT / f"{name}.json"
        path.write_text(json.dumps(payload, indent=2) + "\n")
        print(path.relative_to(ROOT))


if __name__ == "__main__":
    main()
