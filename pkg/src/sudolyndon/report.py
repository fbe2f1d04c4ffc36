"""Computed-data reports: delimited tables plus rendered figures.

Three views of the combinatorics behind the puzzle: how many Lyndon words
exist per length, how many full grids each board size admits versus the block
construction's exponential floor, and how the sparse one-dimensional family's
clue density decays.  Each table is written as CSV with a PNG figure beside
it.  Grids themselves are never drawn.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .partial import family_partial_word
from .solver import count_full_grids, scheme_star_count
from .words import count_lyndon


def _figure():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def word_count_rows(max_length: int) -> list[dict]:
    return [
        {"length": n, "lyndonWords": count_lyndon(n)} for n in range(1, max_length + 1)
    ]


def grid_count_rows(max_dim: int) -> list[dict]:
    rows = []
    for n in range(2, max_dim + 1):
        for m in range(2, max_dim + 1):
            rows.append(
                {
                    "rows": n,
                    "cols": m,
                    "fullGrids": count_full_grids(n, m),
                    "schemeFloor": 2 ** scheme_star_count(n, m),
                }
            )
    return rows


def family_rows(max_p: int) -> list[dict]:
    rows = []
    for p in range(1, max_p + 1):
        pw = family_partial_word(p)
        clues = len(pw) - pw.count("?")
        rows.append(
            {
                "p": p,
                "length": len(pw),
                "clues": clues,
                "clueDensity": round(clues / len(pw), 6),
            }
        )
    return rows


def _write_csv(path: Path, rows: list[dict]) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)


def write_report(
    out_dir: str | Path,
    *,
    max_word_length: int = 16,
    max_grid_dim: int = 5,
    max_family_p: int = 8,
) -> list[Path]:
    """Write all tables and figures into ``out_dir``; returns the created paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    plt = _figure()
    created = []

    words = word_count_rows(max_word_length)
    path = out / "lyndon_counts.csv"
    _write_csv(path, words)
    created.append(path)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy([r["length"] for r in words], [r["lyndonWords"] for r in words], "o-")
    ax.set_xlabel("word length")
    ax.set_ylabel("Lyndon words (one order)")
    ax.set_title("Binary Lyndon words per length")
    ax.grid(True, alpha=0.3)
    path = out / "lyndon_counts.png"
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    created.append(path)

    grids = grid_count_rows(max_grid_dim)
    path = out / "grid_counts.csv"
    _write_csv(path, grids)
    created.append(path)
    fig, ax = plt.subplots(figsize=(6, 4))
    square = [r for r in grids if r["rows"] == r["cols"]]
    ax.semilogy([r["rows"] for r in square], [r["fullGrids"] for r in square], "o-",
                label="full grids")
    ax.semilogy([r["rows"] for r in square], [r["schemeFloor"] for r in square], "s--",
                label="block-construction floor")
    ax.set_xlabel("board side n (square boards)")
    ax.set_ylabel("count")
    ax.set_title("Valid full grids vs the exponential floor")
    ax.legend()
    ax.grid(True, alpha=0.3)
    path = out / "grid_counts.png"
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    created.append(path)

    fam = family_rows(max_family_p)
    path = out / "family_density.csv"
    _write_csv(path, fam)
    created.append(path)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot([r["p"] for r in fam], [r["clueDensity"] for r in fam], "o-")
    ax.set_xlabel("family parameter p")
    ax.set_ylabel("clues / length")
    ax.set_title("Clue density of the sparse 1-D family")
    ax.set_ylim(bottom=0)
    ax.grid(True, alpha=0.3)
    path = out / "family_density.png"
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    created.append(path)

    return created
