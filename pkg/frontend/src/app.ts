// Controller: wires user events to API calls and state updates, with per
// action in-flight de-duplication so a slow response cannot be doubled by
// an eager second click.

import { ApiClient, ApiError } from "./api.js";
import { render } from "./render.js";
import {
  applyCheck,
  applyHintAssignments,
  applyHintResponse,
  applySolution,
  boardCells,
  conflictFromMessage,
  cycleCell,
  emptyState,
  loadPuzzle,
  setBanner,
  setConflict,
  type BoardViewState,
} from "./state.js";

export interface AppOptions {
  newPuzzleSize?: { n: number; m: number };
  confirmFn?: (message: string) => boolean;
  seed?: number;
}

export class App {
  state: BoardViewState = emptyState();
  private inFlight = new Set<string>();
  private readonly confirmFn: (message: string) => boolean;
  private readonly newPuzzleSize: { n: number; m: number };
  private readonly seed?: number;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    options: AppOptions = {},
  ) {
    this.confirmFn = options.confirmFn ?? ((message) => window.confirm(message));
    this.newPuzzleSize = options.newPuzzleSize ?? { n: 4, m: 4 };
    this.seed = options.seed;
  }

  private update(state: BoardViewState): void {
    this.state = state;
    render(this.root, this.state, {
      onCellClick: (row, col) => this.handleCellClick(row, col),
      onCheck: () => void this.check(),
      onHint: () => void this.hint(),
      onApplyHint: () => this.applyHint(),
      onNewPuzzle: () => void this.newPuzzle(),
      onReveal: () => void this.reveal(),
    });
  }

  /** Run an async action unless the same action is already in flight. */
  private async dedup(action: string, body: () => Promise<void>): Promise<void> {
    if (this.inFlight.has(action)) return;
    this.inFlight.add(action);
    try {
      await body();
    } finally {
      this.inFlight.delete(action);
    }
  }

  private handleFailure(err: unknown): void {
    if (err instanceof ApiError) {
      if (err.status === 422) {
        const conflict = conflictFromMessage(err.message);
        this.update(setConflict(setBanner(this.state, err.message), conflict));
        return;
      }
      this.update(setBanner(this.state, err.message));
      return;
    }
    this.update(setBanner(this.state, String(err)));
  }

  async loadById(id: string): Promise<void> {
    await this.dedup("load", async () => {
      try {
        const { puzzle } = await this.api.getPuzzle(id);
        this.update(loadPuzzle(id, puzzle));
      } catch (err) {
        this.handleFailure(err);
      }
    });
  }

  async newPuzzle(): Promise<void> {
    await this.dedup("new", async () => {
      try {
        const created = await this.api.createPuzzle({
          n: this.newPuzzleSize.n,
          m: this.newPuzzleSize.m,
          seed: this.seed,
        });
        this.update(loadPuzzle(created.id, created.puzzle));
      } catch (err) {
        this.handleFailure(err);
      }
    });
  }

  handleCellClick(row: number, col: number): void {
    this.update(cycleCell(this.state, row, col));
  }

  async check(): Promise<void> {
    const id = this.state.puzzleId;
    if (!id) return;
    await this.dedup("check", async () => {
      try {
        const response = await this.api.check(id, boardCells(this.state));
        this.update(applyCheck(this.state, response));
      } catch (err) {
        this.handleFailure(err);
      }
    });
  }

  async hint(): Promise<void> {
    const id = this.state.puzzleId;
    if (!id) return;
    await this.dedup("hint", async () => {
      try {
        const response = await this.api.hint(id, boardCells(this.state));
        this.update(applyHintResponse(this.state, response));
      } catch (err) {
        this.handleFailure(err);
      }
    });
  }

  applyHint(): void {
    if (!this.state.hint) return;
    this.update(applyHintAssignments(this.state));
  }

  async reveal(): Promise<void> {
    const id = this.state.puzzleId;
    if (!id) return;
    if (!this.confirmFn("Reveal the whole solution?")) return;
    await this.dedup("reveal", async () => {
      try {
        const { solution } = await this.api.reveal(id);
        this.update(applySolution(this.state, solution.cells));
      } catch (err) {
        this.handleFailure(err);
      }
    });
  }
}
