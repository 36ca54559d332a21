// Scripted session against a really-served backend: boots the python
// service, then drives the same controller the browser UI uses.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { GameApi } from "../src/api.js";
import { GameController, winningMoves } from "../src/controller.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(timeoutMs = 20000): Promise<void> {
    const deadline = Date.now() + timeoutMs;
    while (Date.now() < deadline) {
        try {
            const response = await fetch(`${BASE}/games/warmup-probe`);
            if (response.status === 404) return;
        } catch {
            // not listening yet
        }
        await new Promise((resolve) => setTimeout(resolve, 200));
    }
    throw new Error("backend did not come up");
}

beforeAll(async () => {
    server = spawn(
        "python3",
        ["-m", "uvicorn", "lctr.service.app:app", "--host", "127.0.0.1", "--port", String(PORT)],
        { stdio: "ignore" },
    );
    await waitForServer();
});

afterAll(() => {
    server?.kill();
});

describe("playthrough against the engine", () => {
    it("the engine wins (2,1) as second player", async () => {
        const controller = new GameController(new GameApi(BASE));
        let view = await controller.startGame("2,1", "plays_second");
        expect(view.rows).toEqual([2, 1]);
        expect(view.turn).toBe("human");

        view = await controller.submitMove("T");
        expect(view.finished).toBe(true);
        expect(view.rows).toEqual([]);
        expect(view.winner).toBe("engine");
    });

    it("the engine also wins (2,1) when the human takes the column", async () => {
        const controller = new GameController(new GameApi(BASE));
        await controller.startGame("2,1", "plays_second");
        const view = await controller.submitMove("L");
        expect(view.finished).toBe(true);
        expect(view.winner).toBe("engine");
    });
});

describe("hint overlay", () => {
    it("shows L:2, T:0 on the worked example with T marked winning", async () => {
        const controller = new GameController(new GameApi(BASE));
        await controller.startGame("5,3^2,2,1^2", "plays_second");
        const view = await controller.toggleHints();
        expect(view.hint).not.toBeNull();
        expect(view.hint!.sg).toBe(1);
        expect(view.hint!.outcome).toBe("N");
        expect(view.hint!.followers.L.sg).toBe(2);
        expect(view.hint!.followers.T.sg).toBe(0);
        expect(winningMoves(view)).toEqual(["T"]);
    });

    it("reports a losing position on a gamma shape", async () => {
        const controller = new GameController(new GameApi(BASE));
        await controller.startGame("6,1^4", "plays_second");
        const view = await controller.toggleHints();
        expect(view.hint!.sg).toBe(0);
        expect(view.hint!.outcome).toBe("P");
        expect(winningMoves(view)).toEqual([]);
    });
});

describe("input errors", () => {
    it("an empty start shows an inline notice", async () => {
        const controller = new GameController(new GameApi(BASE));
        const view = await controller.startGame("()", "plays_second");
        expect(view.sessionId).toBeNull();
        expect(view.notice).toBeTruthy();
    });
});
