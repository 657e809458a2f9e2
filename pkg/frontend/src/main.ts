import { ApiClient } from "./api";
import { Board } from "./board";
import { GameController } from "./game";
import type { FamilyCatalogEntry, GraphView, Role, SolvedRecord } from "./types";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function describeSolved(rec: SolvedRecord | null): string {
  if (!rec) return "";
  if (rec.outcome === "R") {
    return `Solved: Resolver wins both games (R-game in ${rec.r_mb}, S-game in ${rec.r_mb_s}).`;
  }
  if (rec.outcome === "S") {
    return `Solved: Spoiler wins both games (R-game in ${rec.s_mb}, S-game in ${rec.s_mb_s}).`;
  }
  return `Solved: first player wins (Resolver in ${rec.r_mb}, Spoiler in ${rec.s_mb_s}).`;
}

async function init(): Promise<void> {
  const api = new ApiClient("");
  const statusLine = el<HTMLDivElement>("status");
  const banner = el<HTMLDivElement>("banner");
  const solvedLine = el<HTMLDivElement>("solved");
  const hintLine = el<HTMLDivElement>("hint-line");
  const svg = document.getElementById("board") as unknown as SVGSVGElement;

  const controller = new GameController(api, (event) => {
    switch (event.type) {
      case "updated": {
        const view = event.view;
        board.render(view);
        banner.textContent = controller.banner() ?? "";
        banner.className = view.status === "ongoing" ? "banner hidden" : "banner " + view.status;
        solvedLine.textContent = describeSolved(view.solved);
        const resolving = view.resolver_set_resolving ? " [resolver set resolves]" : "";
        const dead = view.position_dead ? " [no completion left]" : "";
        statusLine.textContent =
          view.status === "ongoing"
            ? `${view.state.to_move === view.human_role ? "Your move" : "Engine thinking"} ` +
              `(you are ${view.human_role === "R" ? "Resolver" : "Spoiler"})${resolving}${dead}`
            : "Game over";
        break;
      }
      case "hint":
        board.showHint(event.hint.vertex);
        hintLine.textContent = `Hint: vertex ${event.hint.vertex} (${event.hint.tag})`;
        if (controller.view) board.render(controller.view);
        break;
      case "rejected":
        board.shake();
        hintLine.textContent = event.reason;
        break;
      case "error":
        hintLine.textContent = `Error: ${event.message}`;
        break;
    }
  });

  const board = new Board(svg, {
    onVertexClick: (vertex) => {
      board.showHint(null);
      void controller.clickVertex(vertex);
    },
  });

  const familySelect = el<HTMLSelectElement>("family");
  const paramsInput = el<HTMLInputElement>("params");
  const uploadInput = el<HTMLTextAreaElement>("upload");
  let catalog: FamilyCatalogEntry[] = [];
  try {
    catalog = await api.listFamilies();
  } catch {
    hintLine.textContent = "Service unreachable; is the server running?";
  }
  for (const entry of catalog) {
    const opt = document.createElement("option");
    opt.value = entry.kind;
    opt.textContent = `${entry.kind} (${entry.description})`;
    familySelect.appendChild(opt);
  }
  const uploadOpt = document.createElement("option");
  uploadOpt.value = "";
  uploadOpt.textContent = "uploaded graph JSON";
  familySelect.appendChild(uploadOpt);
  familySelect.value = "petersen";
  paramsInput.value = "";
  familySelect.addEventListener("change", () => {
    const entry = catalog.find((e) => e.kind === familySelect.value);
    paramsInput.placeholder = entry
      ? entry.params.map((p) => p.name).join(" ") || "no parameters"
      : "paste graph JSON below";
  });

  el<HTMLButtonElement>("start").addEventListener("click", () => {
    hintLine.textContent = "";
    const role = el<HTMLSelectElement>("role").value as Role;
    const first = el<HTMLSelectElement>("first").value as Role;
    if (familySelect.value === "") {
      let graph: GraphView;
      try {
        graph = JSON.parse(uploadInput.value) as GraphView;
      } catch (err) {
        hintLine.textContent = `Invalid graph JSON: ${String(err)}`;
        return;
      }
      void controller.start({ graph }, role, first);
      return;
    }
    const params = paramsInput.value
      .split(/[\s,]+/)
      .filter((tok) => tok.length > 0)
      .map(Number);
    if (params.some((x) => !Number.isInteger(x))) {
      hintLine.textContent = "Parameters must be integers";
      return;
    }
    void controller.start(
      { family: { kind: familySelect.value, params } },
      role,
      first,
    );
  });

  el<HTMLButtonElement>("hint").addEventListener("click", () => {
    void controller.requestHint();
  });
  el<HTMLButtonElement>("reconcile").addEventListener("click", async () => {
    const matched = await controller.reconcile();
    hintLine.textContent = matched
      ? "Board matches the server state"
      : "Board refreshed from the server";
  });
}

void init();
