import type {
  FamilyCatalogEntry,
  FamilySpec,
  GraphView,
  Hint,
  Role,
  SessionView,
} from "./types";

export type FetchLike = (
  input: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

/** Thin typed client for the session service; the fetch implementation is
 * injectable so game logic can be driven in tests. */
export class ApiClient {
  constructor(
    private base: string = "",
    private fetchImpl: FetchLike = fetch as unknown as FetchLike,
  ) {}

  private async request<T>(path: string, init?: Parameters<FetchLike>[1]): Promise<T> {
    const res = await this.fetchImpl(this.base + path, init);
    const body = (await res.json().catch(() => null)) as
      | { detail?: string }
      | null;
    if (!res.ok) {
      throw new ApiError(res.status, body?.detail ?? `HTTP ${res.status}`);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  createSession(source: { family?: FamilySpec; graph?: GraphView }, humanRole: Role, firstPlayer: Role): Promise<SessionView> {
    return this.post<SessionView>("/api/session", {
      ...source,
      human_role: humanRole,
      first_player: firstPlayer,
    });
  }

  getSession(id: string): Promise<SessionView> {
    return this.request<SessionView>(`/api/session/${id}`);
  }

  playMove(id: string, vertex: number): Promise<SessionView> {
    return this.post<SessionView>(`/api/session/${id}/move`, { vertex });
  }

  getHint(id: string): Promise<Hint> {
    return this.request<Hint>(`/api/session/${id}/hint`);
  }

  listFamilies(): Promise<FamilyCatalogEntry[]> {
    return this.request<FamilyCatalogEntry[]>("/api/families");
  }
}
