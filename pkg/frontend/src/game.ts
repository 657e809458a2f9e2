import { ApiClient, ApiError } from "./api";
import type { FamilySpec, GraphView, Hint, Role, SessionView } from "./types";

export type GameEvent =
  | { type: "updated"; view: SessionView }
  | { type: "hint"; hint: Hint }
  | { type: "rejected"; reason: string }
  | { type: "error"; message: string };

export type Listener = (event: GameEvent) => void;

/** Client-side game state machine. The server stays authoritative: every
 * interaction returns the server's view, and `reconcile` re-fetches and
 * verifies the local copy matches byte for byte. */
export class GameController {
  view: SessionView | null = null;

  constructor(
    private api: ApiClient,
    private listener: Listener,
  ) {}

  private update(view: SessionView): void {
    this.view = view;
    this.listener({ type: "updated", view });
  }

  async start(
    source: { family?: FamilySpec; graph?: GraphView },
    humanRole: Role,
    firstPlayer: Role,
  ): Promise<void> {
    try {
      const created = await this.api.createSession(source, humanRole, firstPlayer);
      // the full view may add the lazily solved record; fetch it once so all
      // later views compare byte for byte
      this.update(await this.api.getSession(created.id));
    } catch (err) {
      this.listener({ type: "error", message: describe(err) });
    }
  }

  /** Local legality guard mirroring the server rules; the server still
   * validates every move it receives. */
  rejectReason(vertex: number): string | null {
    const view = this.view;
    if (!view) return "no active game";
    if (view.status !== "ongoing") return "the game is over";
    if (view.state.to_move !== view.human_role) return "not your turn";
    if (vertex < 0 || vertex >= view.graph.n) return "no such vertex";
    if (
      view.state.r_claimed.includes(vertex) ||
      view.state.s_claimed.includes(vertex)
    ) {
      return "vertex already claimed";
    }
    return null;
  }

  async clickVertex(vertex: number): Promise<void> {
    const reason = this.rejectReason(vertex);
    if (reason) {
      this.listener({ type: "rejected", reason });
      return;
    }
    try {
      this.update(await this.api.playMove(this.view!.id, vertex));
    } catch (err) {
      if (err instanceof ApiError && (err.status === 409 || err.status === 400)) {
        this.listener({ type: "rejected", reason: err.message });
        await this.reconcile();
      } else {
        this.listener({ type: "error", message: describe(err) });
      }
    }
  }

  async requestHint(): Promise<Hint | null> {
    if (!this.view || this.view.status !== "ongoing") return null;
    try {
      const hint = await this.api.getHint(this.view.id);
      this.listener({ type: "hint", hint });
      return hint;
    } catch (err) {
      this.listener({ type: "error", message: describe(err) });
      return null;
    }
  }

  /** Re-fetch the authoritative view; returns true when the local state
   * already matched it exactly. */
  async reconcile(): Promise<boolean> {
    if (!this.view) return true;
    const fresh = await this.api.getSession(this.view.id);
    const matched = JSON.stringify(fresh) === JSON.stringify(this.view);
    this.update(fresh);
    return matched;
  }

  banner(): string | null {
    const view = this.view;
    if (!view || view.status === "ongoing") return null;
    const humanWon =
      (view.status === "r_won") === (view.human_role === "R");
    const moves =
      view.status === "r_won"
        ? view.state.r_claimed.length
        : view.state.s_claimed.length;
    const winner = view.status === "r_won" ? "Resolver" : "Spoiler";
    return `${winner} wins in ${moves} moves${humanWon ? " - you win!" : " - engine wins"}`;
  }
}

function describe(err: unknown): string {
  return err instanceof Error ? err.message : String(err);
}
