// DOM rendering: one function of (container, state, handlers), rebuilt per
// update.  Boards are tiny, so full re-render stays simple and fast.

import type { BoardViewState } from "./state.js";
import { lineKey, type LineStatusValue } from "./types.js";

export interface Handlers {
  onCellClick(row: number, col: number): void;
  onCheck(): void;
  onHint(): void;
  onApplyHint(): void;
  onNewPuzzle(): void;
  onReveal(): void;
}

const STATUS_LABEL: Record<LineStatusValue, string> = {
  altValid: "a<b",
  bltValid: "b<a",
  invalid: "not Lyndon",
  incomplete: "…",
};

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function render(root: HTMLElement, state: BoardViewState, handlers: Handlers): void {
  const doc = root.ownerDocument;
  root.textContent = "";

  const toolbar = el(doc, "div", "toolbar");
  const buttons: [string, string, () => void][] = [
    ["check", "Check", handlers.onCheck],
    ["hint", "Hint", handlers.onHint],
    ["apply-hint", "Apply hint", handlers.onApplyHint],
    ["new-puzzle", "New puzzle", handlers.onNewPuzzle],
    ["reveal", "Reveal", handlers.onReveal],
  ];
  for (const [id, label, onClick] of buttons) {
    const button = el(doc, "button", "action", label);
    button.id = id;
    button.addEventListener("click", onClick);
    if (id === "apply-hint" && !state.hint) button.disabled = true;
    toolbar.appendChild(button);
  }
  root.appendChild(toolbar);

  if (state.banner) {
    const banner = el(doc, "div", "banner", state.banner);
    banner.id = "banner";
    root.appendChild(banner);
  }

  if (!state.puzzle) {
    root.appendChild(el(doc, "p", "placeholder", "No puzzle loaded."));
    return;
  }

  const hintCells = new Set(state.hint?.cells.map((c) => `${c.row}:${c.col}`) ?? []);
  const boxRows = state.puzzle.boxRows;
  const boxCols = state.puzzle.boxCols;

  const table = el(doc, "table", "board");
  const body = el(doc, "tbody");
  for (let i = 0; i < state.puzzle.n; i++) {
    const tr = el(doc, "tr");
    for (let j = 0; j < state.puzzle.m; j++) {
      const cell = state.cells[i][j];
      const classes = ["cell"];
      if (cell.clue) classes.push("locked");
      if (cell.wild) classes.push("wild");
      if (state.selected && state.selected.row === i && state.selected.col === j) {
        classes.push("selected");
      }
      if (hintCells.has(`${i}:${j}`)) classes.push("hint");
      if (state.conflict && state.conflict.row === i && state.conflict.col === j) {
        classes.push("conflict");
      }
      if (boxRows && i % boxRows === 0) classes.push("box-top");
      if (boxCols && j % boxCols === 0) classes.push("box-left");
      const td = el(doc, "td", classes.join(" "), cell.entry ?? (cell.wild ? "*" : ""));
      td.dataset.row = String(i);
      td.dataset.col = String(j);
      if (!cell.clue) {
        td.addEventListener("click", () => handlers.onCellClick(i, j));
      }
      tr.appendChild(td);
    }
    body.appendChild(tr);
  }
  table.appendChild(body);
  root.appendChild(table);

  const badges = el(doc, "div", "badges");
  badges.id = "badges";
  const refs: [string, number][] = [];
  for (let i = 0; i < state.puzzle.n; i++) refs.push(["row", i]);
  for (let j = 0; j < state.puzzle.m; j++) refs.push(["col", j]);
  if (boxRows && boxCols) {
    const count = (state.puzzle.n / boxRows) * (state.puzzle.m / boxCols);
    for (let k = 0; k < count; k++) refs.push(["box", k]);
  }
  for (const [kind, index] of refs) {
    const status = state.lineStatuses[lineKey(kind as never, index)];
    const badge = el(
      doc,
      "span",
      `badge ${status ?? "unchecked"}`,
      `${kind} ${index + 1}: ${status ? STATUS_LABEL[status] : "?"}`,
    );
    badge.dataset.line = lineKey(kind as never, index);
    badges.appendChild(badge);
  }
  root.appendChild(badges);

  if (state.hint) {
    const overlay = el(doc, "div", "hint-overlay");
    overlay.id = "hint-overlay";
    overlay.appendChild(el(doc, "strong", "hint-rule", state.hint.rule));
    overlay.appendChild(el(doc, "span", "hint-text", ` ${state.hint.explanation}`));
    root.appendChild(overlay);
  }
}
