// Browser entry point.  The API origin defaults to the page's own origin;
// override with ?api=http://127.0.0.1:8000 during development.

import { ApiClient } from "./api.js";
import { App } from "./app.js";

const params = new URLSearchParams(window.location.search);
const api = new ApiClient(params.get("api") ?? "");
const root = document.getElementById("app");
if (!root) throw new Error("missing #app container");

const app = new App(root, api, {
  newPuzzleSize: {
    n: Number(params.get("rows") ?? 4),
    m: Number(params.get("cols") ?? 4),
  },
});

const puzzleId = params.get("puzzle");
if (puzzleId) {
  void app.loadById(puzzleId);
} else {
  void app.newPuzzle();
}
