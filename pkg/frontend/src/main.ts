import { GameApi } from "./api.js";
import { GameController } from "./controller.js";
import { renderBoard } from "./render.js";
import type { EngineRole } from "./types.js";

const PRESETS: Record<string, string> = {
    "worked example (5,3²,2,1²)": "5,3^2,2,1^2",
    "rectangle (5⁴)": "5^4",
    "staircase 6": "6,5,4,3,2,1",
    "gamma (6,1⁴)": "6,1^4",
    "quadrated (12²,10²,6⁴)": "12^2,10^2,6^4",
};

function element<T extends HTMLElement>(id: string): T {
    const found = document.getElementById(id);
    if (!found) throw new Error(`missing #${id}`);
    return found as T;
}

function serviceBaseUrl(): string {
    const params = new URLSearchParams(window.location.search);
    return params.get("service") ?? "http://127.0.0.1:8000";
}

function setup(): void {
    const boardRoot = element<HTMLDivElement>("board");
    const startInput = element<HTMLInputElement>("start-text");
    const roleSelect = element<HTMLSelectElement>("engine-role");
    const startButton = element<HTMLButtonElement>("start");
    const hintButton = element<HTMLButtonElement>("hints");
    const presetsBox = element<HTMLDivElement>("presets");

    const controller = new GameController(new GameApi(serviceBaseUrl()), (view) => {
        renderBoard(boardRoot, view, { onMove: (move) => void controller.submitMove(move) });
        hintButton.disabled = !view.sessionId || view.finished;
        hintButton.textContent = view.hint ? "Hide hints" : "Show hints";
    });

    startButton.addEventListener("click", () => {
        void controller.startGame(startInput.value, roleSelect.value as EngineRole);
    });
    hintButton.addEventListener("click", () => void controller.toggleHints());

    for (const [label, text] of Object.entries(PRESETS)) {
        const button = document.createElement("button");
        button.textContent = label;
        button.addEventListener("click", () => {
            startInput.value = text;
            void controller.startGame(text, roleSelect.value as EngineRole);
        });
        presetsBox.appendChild(button);
    }
}

setup();
