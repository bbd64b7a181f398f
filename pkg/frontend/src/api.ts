// Thin typed client over an injectable fetch, so tests can drive the
// whole UI stack from recorded server exchanges.

import type {
  AnalysisView,
  ApiErrorBody,
  CreateGameRequest,
  MoveRef,
  SessionView,
} from "./types.js";

export type FetchLike = (
  input: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ status: number; json(): Promise<unknown> }>;

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.code = body.code;
    this.status = status;
  }
}

export class GameClient {
  constructor(
    private readonly fetchImpl: FetchLike,
    private readonly base: string = "",
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(this.base + path, {
      method,
      headers: { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await response.json();
    if (response.status >= 400) {
      throw new ApiError(response.status, payload as ApiErrorBody);
    }
    return payload as T;
  }

  createGame(request: CreateGameRequest): Promise<SessionView> {
    return this.request("POST", "/api/games", request);
  }

  getGame(id: string): Promise<SessionView> {
    return this.request("GET", `/api/games/${id}`);
  }

  postMove(id: string, move: MoveRef): Promise<SessionView> {
    return this.request("POST", `/api/games/${id}/moves`, move);
  }

  getAnalysis(id: string): Promise<AnalysisView> {
    return this.request("GET", `/api/games/${id}/analysis`);
  }
}
