// Thin typed client for the puzzle service.  All game logic lives server
// side; this file only moves JSON.

import type {
  CheckResponse,
  CreateRequest,
  CreateResponse,
  HintResponse,
  PuzzleJson,
  SolutionJson,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(`${this.baseUrl}/api/v1${path}`, {
        method,
        headers: body === undefined ? undefined : { "Content-Type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError(0, `network failure: ${String(err)}`);
    }
    let payload: unknown = null;
    try {
      payload = await response.json();
    } catch {
      // non-JSON bodies fall through to the status check
    }
    if (!response.ok) {
      const detail =
        payload && typeof payload === "object" && "error" in payload
          ? String((payload as { error: unknown }).error)
          : `HTTP ${response.status}`;
      throw new ApiError(response.status, detail);
    }
    return payload as T;
  }

  createPuzzle(body: CreateRequest): Promise<CreateResponse> {
    return this.request("POST", "/puzzles", body);
  }

  getPuzzle(id: string): Promise<{ puzzle: PuzzleJson }> {
    return this.request("GET", `/puzzles/${id}`);
  }

  check(id: string, cells: string[]): Promise<CheckResponse> {
    return this.request("POST", `/puzzles/${id}/check`, { cells });
  }

  hint(id: string, cells: string[]): Promise<HintResponse> {
    return this.request("POST", `/puzzles/${id}/hint`, { cells });
  }

  reveal(id: string): Promise<{ solution: SolutionJson }> {
    return this.request("POST", `/puzzles/${id}/reveal`, {});
  }
}
