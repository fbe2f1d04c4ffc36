// Board view state and its pure update functions.  The state never decides
// whether anything is a Lyndon word; every verdict shown comes from a
// service response stored here.

import {
  type CheckResponse,
  type HintResponse,
  type Letter,
  type LineStatusValue,
  type PuzzleJson,
  isDeduction,
  lineKey,
} from "./types.js";

export interface CellView {
  clue: boolean;
  wild: boolean;
  entry: Letter | null; // for clue cells, the clue letter itself
}

export interface HintView {
  rule: string;
  explanation: string;
  cells: { row: number; col: number; letter: Letter }[];
}

export interface BoardViewState {
  puzzleId: string | null;
  puzzle: PuzzleJson | null;
  cells: CellView[][];
  selected: { row: number; col: number } | null;
  lineStatuses: Record<string, LineStatusValue>;
  solved: boolean;
  hint: HintView | null;
  hintStatus: "exhausted" | "contradiction" | null;
  banner: string | null;
  conflict: { row: number; col: number } | null;
}

export function emptyState(): BoardViewState {
  return {
    puzzleId: null,
    puzzle: null,
    cells: [],
    selected: null,
    lineStatuses: {},
    solved: false,
    hint: null,
    hintStatus: null,
    banner: null,
    conflict: null,
  };
}

export function loadPuzzle(id: string, puzzle: PuzzleJson): BoardViewState {
  const cells = puzzle.cells.map((row) =>
    [...row].map((ch): CellView => {
      if (ch === "a" || ch === "b") return { clue: true, wild: false, entry: ch };
      if (ch === "*") return { clue: false, wild: true, entry: null };
      return { clue: false, wild: false, entry: null };
    }),
  );
  return { ...emptyState(), puzzleId: id, puzzle, cells };
}

function withCells(state: BoardViewState, cells: CellView[][]): BoardViewState {
  // Any edit invalidates shown verdicts and overlays.
  return {
    ...state,
    cells,
    lineStatuses: {},
    solved: false,
    hint: null,
    hintStatus: null,
    conflict: null,
  };
}

const CYCLE: (Letter | null)[] = [null, "a", "b"];

export function cycleCell(state: BoardViewState, row: number, col: number): BoardViewState {
  const cell = state.cells[row]?.[col];
  if (!cell || cell.clue) return state; // clue cells are immutable
  const next = CYCLE[(CYCLE.indexOf(cell.entry) + 1) % CYCLE.length];
  const cells = state.cells.map((r, i) =>
    i === row ? r.map((c, j) => (j === col ? { ...c, entry: next } : c)) : r,
  );
  return { ...withCells(state, cells), selected: { row, col } };
}

export function setCell(
  state: BoardViewState,
  row: number,
  col: number,
  letter: Letter,
): BoardViewState {
  const cell = state.cells[row]?.[col];
  if (!cell || cell.clue) return state;
  const cells = state.cells.map((r, i) =>
    i === row ? r.map((c, j) => (j === col ? { ...c, entry: letter } : c)) : r,
  );
  return withCells(state, cells);
}

export function selectCell(state: BoardViewState, row: number, col: number): BoardViewState {
  return { ...state, selected: { row, col } };
}

/** Serialize the board exactly as the check/hint payload wants it. */
export function boardCells(state: BoardViewState): string[] {
  return state.cells.map((row) => row.map((c) => c.entry ?? ".").join(""));
}

export function applyCheck(state: BoardViewState, response: CheckResponse): BoardViewState {
  const statuses: Record<string, LineStatusValue> = {};
  for (const line of response.lines) {
    statuses[lineKey(line.kind, line.index)] = line.status;
  }
  return {
    ...state,
    lineStatuses: statuses,
    solved: response.solved,
    banner: response.solved ? "Solved! Every line is a Lyndon word." : state.banner,
  };
}

export function applyHintResponse(state: BoardViewState, response: HintResponse): BoardViewState {
  if (isDeduction(response)) {
    return {
      ...state,
      hint: {
        rule: response.rule,
        explanation: response.explanation,
        cells: response.assignments,
      },
      hintStatus: null,
    };
  }
  return {
    ...state,
    hint: null,
    hintStatus: response.status,
    banner:
      response.status === "contradiction"
        ? "Contradiction: some line can no longer become a Lyndon word."
        : "No rule-based deduction applies; try Reveal for the answer.",
  };
}

/** One-click apply of the stored hint's forced letters. */
export function applyHintAssignments(state: BoardViewState): BoardViewState {
  if (!state.hint) return state;
  let next = state;
  for (const { row, col, letter } of state.hint.cells) {
    next = setCell(next, row, col, letter);
  }
  return next;
}

export function applySolution(state: BoardViewState, cells: string[]): BoardViewState {
  const next = state.cells.map((row, i) =>
    row.map((c, j) => (c.clue ? c : { ...c, entry: cells[i][j] as Letter })),
  );
  return withCells(state, next);
}

export function setBanner(state: BoardViewState, banner: string | null): BoardViewState {
  return { ...state, banner };
}

export function setConflict(
  state: BoardViewState,
  conflict: { row: number; col: number } | null,
): BoardViewState {
  return { ...state, conflict };
}

/** Parse "row N, col M" out of a clue-conflict message, 1-based in the text. */
export function conflictFromMessage(message: string): { row: number; col: number } | null {
  const match = /row (\d+), col (\d+)/.exec(message);
  if (!match) return null;
  return { row: Number(match[1]) - 1, col: Number(match[2]) - 1 };
}
