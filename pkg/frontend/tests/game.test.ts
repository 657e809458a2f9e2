/** End-to-end play flows against a live service instance: hint-following on
 * the four-leaf star as Spoiler, the 3x3 grid as Resolver, and byte-for-byte
 * reconciliation of the client view after every exchange. */

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { GameController, type GameEvent } from "../src/game";
import type { Hint, SessionView } from "../src/types";

const PORT = 18000 + (process.pid % 2000);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function serviceReady(timeoutMs = 60000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE}/api/families`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 250));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "uvicorn", "resolving_game.service:app", "--port", String(PORT)],
    { stdio: "ignore" },
  );
  await serviceReady();
}, 70000);

afterAll(() => {
  server?.kill();
});

interface Driver {
  controller: GameController;
  events: GameEvent[];
  views: SessionView[];
}

function makeDriver(): Driver {
  const events: GameEvent[] = [];
  const views: SessionView[] = [];
  const controller = new GameController(new ApiClient(BASE), (event) => {
    events.push(event);
    if (event.type === "updated") views.push(event.view);
  });
  return { controller, events, views };
}

async function hintedMove(driver: Driver): Promise<Hint> {
  const hint = await driver.controller.requestHint();
  expect(hint).not.toBeNull();
  await driver.controller.clickVertex(hint!.vertex);
  expect(await driver.controller.reconcile()).toBe(true);
  return hint!;
}

describe("spoiler on the four-leaf star", () => {
  it("wins with an s_won banner after the second hinted move", async () => {
    const driver = makeDriver();
    await driver.controller.start(
      { family: { kind: "star", params: [4] } },
      "S",
      "S",
    );
    expect(driver.controller.view?.status).toBe("ongoing");
    expect(await driver.controller.reconcile()).toBe(true);

    const first = await hintedMove(driver);
    expect(first.tag).toBe("twin-grab");
    expect(driver.controller.view?.status).toBe("ongoing");

    const second = await hintedMove(driver);
    expect(second.tag).toBe("twin-grab");
    const view = driver.controller.view!;
    expect(view.status).toBe("s_won");
    expect(view.state.s_claimed).toHaveLength(2);
    expect(driver.controller.banner()).toBe("Spoiler wins in 2 moves - you win!");
    expect(view.solved?.outcome).toBe("S");
  });
});

describe("resolver on the 3x3 grid", () => {
  it("wins with an r_won banner after the second hinted move", async () => {
    const driver = makeDriver();
    await driver.controller.start(
      { family: { kind: "grid", params: [3, 3] } },
      "R",
      "R",
    );
    const first = await hintedMove(driver);
    expect(first.tag).toBe("pairing-completion");
    expect(driver.controller.view?.status).toBe("ongoing");

    await hintedMove(driver);
    const view = driver.controller.view!;
    expect(view.status).toBe("r_won");
    expect(view.state.r_claimed).toHaveLength(2);
    expect(view.resolver_set_resolving).toBe(true);
    expect(driver.controller.banner()).toBe("Resolver wins in 2 moves - you win!");
  });
});

describe("client-side move guard", () => {
  it("rejects occupied and out-of-turn clicks without a request", async () => {
    const driver = makeDriver();
    await driver.controller.start(
      { family: { kind: "cycle", params: [6] } },
      "R",
      "R",
    );
    await driver.controller.clickVertex(0);
    const view = driver.controller.view!;
    const engineVertex = view.state.s_claimed[0];

    const before = driver.events.length;
    await driver.controller.clickVertex(0); // own claim
    await driver.controller.clickVertex(engineVertex); // engine claim
    await driver.controller.clickVertex(99); // out of range
    const rejections = driver.events
      .slice(before)
      .filter((e) => e.type === "rejected");
    expect(rejections).toHaveLength(3);
    // no new view updates arrived for the rejected clicks
    expect(driver.events.slice(before).some((e) => e.type === "updated")).toBe(false);
    expect(await driver.controller.reconcile()).toBe(true);
  });

  it("surfaces server validation for invalid uploads", async () => {
    const driver = makeDriver();
    await driver.controller.start(
      { graph: { n: 3, edges: [[0, 1]] } },
      "R",
      "R",
    );
    const last = driver.events.at(-1);
    expect(last?.type).toBe("error");
  });
});

describe("full random playout stays reconciled", () => {
  it("mirrors the server byte for byte after every exchange", async () => {
    const driver = makeDriver();
    await driver.controller.start(
      { family: { kind: "cycle", params: [7] } },
      "S",
      "R",
    );
    expect(await driver.controller.reconcile()).toBe(true);
    let guard = 0;
    while (driver.controller.view!.status === "ongoing" && guard++ < 10) {
      const view = driver.controller.view!;
      const taken = new Set([...view.state.r_claimed, ...view.state.s_claimed]);
      const free = Array.from({ length: view.graph.n }, (_, v) => v).filter(
        (v) => !taken.has(v),
      );
      await driver.controller.clickVertex(free[0]);
      expect(await driver.controller.reconcile()).toBe(true);
    }
    expect(driver.controller.view!.status).toBe("r_won");
  });
});
