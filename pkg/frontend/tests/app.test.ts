// @vitest-environment jsdom
//
// UI contract against the fixture server: the flows a player actually runs.

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { App } from "../src/app.js";
import { fixtureServer, paperRoutes, type FixtureServer } from "./fixture_server.js";

const SOLUTION = ["aabb", "aabb", "bbaa", "bbaa"];

let server: FixtureServer;
let root: HTMLElement;

function makeApp(options: { confirm?: boolean } = {}): App {
  server = fixtureServer(paperRoutes());
  root = document.createElement("div");
  document.body.appendChild(root);
  return new App(root, new ApiClient("", server.fetch), {
    confirmFn: () => options.confirm ?? true,
  });
}

function cellAt(row: number, col: number): HTMLTableCellElement {
  const cell = root.querySelector<HTMLTableCellElement>(
    `td[data-row="${row}"][data-col="${col}"]`,
  );
  if (!cell) throw new Error(`no cell ${row},${col}`);
  return cell;
}

function clickButton(id: string): void {
  const button = root.querySelector<HTMLButtonElement>(`#${id}`);
  if (!button) throw new Error(`no button ${id}`);
  button.click();
}

async function settle(): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, 0));
}

function enterSolution(app: App): void {
  for (let i = 0; i < 4; i++) {
    for (let j = 0; j < 4; j++) {
      if (app.state.cells[i][j].clue) continue;
      const want = SOLUTION[i][j];
      const clicks = want === "a" ? 1 : 2;
      for (let k = 0; k < clicks; k++) cellAt(i, j).click();
    }
  }
}

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("loading the 4x4 fixture puzzle", () => {
  it("renders 4 locked cells and 12 editable ones", async () => {
    const app = makeApp();
    await app.loadById("paper4x4");
    const locked = root.querySelectorAll("td.cell.locked");
    expect(locked).toHaveLength(4);
    expect(root.querySelectorAll("td.cell")).toHaveLength(16);
    expect(cellAt(1, 1).textContent).toBe("a");
    expect(cellAt(2, 2).textContent).toBe("a");
  });

  it("ignores clicks on locked cells", async () => {
    const app = makeApp();
    await app.loadById("paper4x4");
    cellAt(1, 1).click();
    expect(app.state.cells[1][1].entry).toBe("a");
  });
});

describe("entering the printed solution and pressing Check", () => {
  it("shows every line valid and the solved banner", async () => {
    const app = makeApp();
    await app.loadById("paper4x4");
    enterSolution(app);
    clickButton("check");
    await settle();
    expect(app.state.solved).toBe(true);
    const badges = [...root.querySelectorAll(".badge")];
    expect(badges).toHaveLength(8);
    for (const badge of badges) {
      expect(badge.className).toMatch(/altValid|bltValid/);
    }
    // Badges teach which order validated each line.
    const row0 = root.querySelector('[data-line="row:0"]');
    const row3 = root.querySelector('[data-line="row:3"]');
    expect(row0?.textContent).toContain("a<b");
    expect(row3?.textContent).toContain("b<a");
    expect(root.querySelector("#banner")?.textContent).toMatch(/Solved/);
  });

  it("an unsolved board reports incomplete lines, not solved", async () => {
    const app = makeApp();
    await app.loadById("paper4x4");
    clickButton("check");
    await settle();
    expect(app.state.solved).toBe(false);
    expect(app.state.lineStatuses["row:0"]).toBe("incomplete");
  });
});

describe("hints", () => {
  it("R2 on the one-row fixture highlights exactly the last two cells", async () => {
    const app = makeApp();
    await app.loadById("hintrow");
    clickButton("hint");
    await settle();
    const highlighted = [...root.querySelectorAll("td.cell.hint")].map((td) => [
      Number((td as HTMLElement).dataset.row),
      Number((td as HTMLElement).dataset.col),
    ]);
    expect(highlighted).toEqual([
      [0, 3],
      [0, 4],
    ]);
    expect(root.querySelector(".hint-rule")?.textContent).toBe("R2");
    expect(root.querySelector("#hint-overlay")?.textContent).toMatch(/ends bb/);
  });

  it("one-click apply fills the hinted letters", async () => {
    const app = makeApp();
    await app.loadById("paper4x4");
    clickButton("hint");
    await settle();
    expect(app.state.hint?.rule).toBe("R1");
    clickButton("apply-hint");
    expect(app.state.cells[1][0].entry).toBe("a");
    expect(app.state.cells[1][3].entry).toBe("b");
    expect(root.querySelectorAll("td.cell.hint")).toHaveLength(0);
  });

  it("a solved board reports exhausted", async () => {
    const app = makeApp();
    await app.loadById("paper4x4");
    enterSolution(app);
    clickButton("hint");
    await settle();
    expect(app.state.hintStatus).toBe("exhausted");
    expect(root.querySelector("#banner")).not.toBeNull();
  });
});

describe("failure handling", () => {
  it("shows a non-blocking banner on network failure", async () => {
    root = document.createElement("div");
    document.body.appendChild(root);
    const api = new ApiClient("", async () => {
      throw new Error("connection refused");
    });
    const app = new App(root, api, { confirmFn: () => true });
    await app.loadById("paper4x4");
    expect(root.querySelector("#banner")?.textContent).toMatch(/network failure/);
  });

  it("a 422 clue conflict highlights the conflicting cell", async () => {
    const app = makeApp();
    await app.loadById("paper4x4");
    // Force a board that contradicts the (1,1) clue; the UI cannot produce
    // one by clicking (clues are locked), so drive the API path directly.
    app.state = {
      ...app.state,
      cells: app.state.cells.map((row, i) =>
        row.map((c, j) =>
          i === 1 && j === 1 ? { clue: false, wild: false, entry: "b" as const } : c,
        ),
      ),
    };
    await app.check();
    expect(app.state.banner).toMatch(/contradicts the clue/);
    expect(app.state.conflict).toEqual({ row: 1, col: 1 });
    expect(root.querySelectorAll("td.cell.conflict")).toHaveLength(1);
  });
});

describe("reveal", () => {
  it("is gated behind confirmation", async () => {
    const app = makeApp({ confirm: false });
    await app.loadById("paper4x4");
    clickButton("reveal");
    await settle();
    expect(server.calls.some((c) => c.path.endsWith("/reveal"))).toBe(false);
  });

  it("fills the whole board when confirmed", async () => {
    const app = makeApp({ confirm: true });
    await app.loadById("paper4x4");
    clickButton("reveal");
    await settle();
    expect(app.state.cells.map((r) => r.map((c) => c.entry).join(""))).toEqual(SOLUTION);
  });
});

describe("in-flight de-duplication", () => {
  it("drops a second check while one is pending", async () => {
    server = fixtureServer(paperRoutes());
    const gated: typeof server.fetch = (input, init) =>
      new Promise((resolve) => setTimeout(() => resolve(server.fetch(input, init)), 5));
    root = document.createElement("div");
    document.body.appendChild(root);
    const app = new App(root, new ApiClient("", gated), { confirmFn: () => true });
    await app.loadById("paper4x4");
    const first = app.check();
    const second = app.check();
    await Promise.all([first, second]);
    const checks = server.calls.filter((c) => c.path.endsWith("/check"));
    expect(checks).toHaveLength(1);
  });
});
