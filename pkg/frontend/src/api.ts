/** Typed client for the slowcolor play service.  The browser never
 * computes game values itself; everything comes from these routes. */

export type Variant = "slow" | "isc";
export type Role = "lister" | "painter" | "requester" | "supplier";
export type Engine = "exact" | "constructive";

export interface GameState {
  id: string;
  variant: Variant;
  human_role: Role;
  engine: Engine;
  n: number;
  edges: [number, number][];
  status: "active" | "finished";
  value: number | null;
  history: unknown[];
  // slow variant
  live?: number[];
  score?: number;
  pending_mark?: number[] | null;
  final_score?: number;
  // interactive variant
  lists?: Record<string, number[]>;
  rounds?: number;
  pending_request?: number | null;
  final_rounds?: number;
  witness?: number[] | null;
}

export interface Hint {
  moves: number[][];
  value: number | null;
}

export interface CreateBody {
  graph: string;
  variant: Variant;
  human_role: Role;
  engine: Engine;
}

export class ApiError extends Error {
  constructor(public status: number, public reason: string) {
    super(`${status}: ${reason}`);
  }
}

async function parseError(res: Response): Promise<never> {
  let reason = res.statusText;
  try {
    const body = await res.json();
    reason = body?.detail?.reason ?? JSON.stringify(body.detail ?? body);
  } catch {
    /* non-JSON body */
  }
  throw new ApiError(res.status, reason);
}

export class Api {
  constructor(
    private base: string,
    private fetchFn: typeof fetch = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchFn(`${this.base}${path}`, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (!res.ok) await parseError(res);
    if (res.status === 204) return undefined as T;
    return (await res.json()) as T;
  }

  createGame(body: CreateBody): Promise<GameState> {
    return this.request("/games", { method: "POST", body: JSON.stringify(body) });
  }

  getGame(id: string): Promise<GameState> {
    return this.request(`/games/${id}`);
  }

  move(id: string, body: object): Promise<GameState> {
    return this.request(`/games/${id}/move`, {
      method: "POST",
      body: JSON.stringify(body),
    });
  }

  hint(id: string): Promise<Hint> {
    return this.request(`/games/${id}/hint`);
  }

  deleteGame(id: string): Promise<void> {
    return this.request(`/games/${id}`, { method: "DELETE" });
  }
}
