/** Thin typed client over the game service endpoints. */

import type { EngineMoveResponse, EvalResult, GameKind, GameState, MoveKind, NewGameResponse } from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function toApiError(response: Response): Promise<ApiError> {
  let code = "error";
  let message = `${response.status}`;
  try {
    const body = (await response.json()) as { error?: string; message?: string };
    code = body.error ?? code;
    message = body.message ?? message;
  } catch {
    // non-JSON error body; keep the status text
  }
  return new ApiError(response.status, code, message);
}

export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  private async requestJson<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      throw await toApiError(response);
    }
    return (await response.json()) as T;
  }

  newGame(partition: string, game: GameKind, humanFirst: boolean): Promise<NewGameResponse> {
    return this.requestJson<NewGameResponse>("POST", "/games", {
      partition,
      game,
      human_first: humanFirst,
    });
  }

  getGame(id: string): Promise<GameState> {
    return this.requestJson<GameState>("GET", `/games/${id}`);
  }

  submitMove(id: string, kind: MoveKind): Promise<GameState> {
    return this.requestJson<GameState>("POST", `/games/${id}/moves`, { kind });
  }

  engineMove(id: string): Promise<EngineMoveResponse> {
    return this.requestJson<EngineMoveResponse>("POST", `/games/${id}/engine-move`);
  }

  evalPosition(partition: string, game: GameKind): Promise<EvalResult> {
    return this.requestJson<EvalResult>(
      "GET",
      `/eval?partition=${encodeURIComponent(partition)}&game=${encodeURIComponent(game)}`,
    );
  }

  /** Raw grid text; the overlay must match this byte for byte. */
  async evalGrid(partition: string, game: GameKind): Promise<string> {
    const response = await fetch(
      `${this.baseUrl}/eval/grid?partition=${encodeURIComponent(partition)}&game=${encodeURIComponent(game)}`,
    );
    if (!response.ok) {
      throw await toApiError(response);
    }
    return response.text();
  }
}
