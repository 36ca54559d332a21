import { winningMoves, type BoardView } from "./controller.js";
import type { MoveToken, Winner } from "./types.js";

/** Boards up to 60x60 get one element per box; bigger ones become bars. */
export function boardLayout(rows: number[]): "grid" | "bars" | "empty" {
    if (rows.length === 0) return "empty";
    const width = rows[0] ?? 0;
    return rows.length <= 60 && width <= 60 ? "grid" : "bars";
}

export function winnerBanner(winner: Winner | null): string {
    switch (winner) {
        case "human":
            return "You win!";
        case "engine":
            return "The engine wins.";
        case "mover":
            return "Game over: the player who just moved wins.";
        default:
            return "";
    }
}

export interface MoveHandlers {
    onMove: (move: MoveToken) => void;
}

export function renderBoard(root: HTMLElement, view: BoardView, handlers: MoveHandlers): void {
    root.replaceChildren();

    const status = document.createElement("div");
    status.className = "status";
    if (view.finished) {
        status.textContent = winnerBanner(view.winner);
        status.classList.add(view.winner === "human" ? "status-win" : "status-lose");
    } else if (view.sessionId) {
        status.textContent = view.hint && view.hint.outcome === "P"
            ? "P-position: no winning move"
            : "Your move";
    } else {
        status.textContent = "Start a game";
    }
    root.appendChild(status);

    if (view.notice) {
        const notice = document.createElement("div");
        notice.className = "notice";
        notice.textContent = view.notice;
        root.appendChild(notice);
    }

    root.appendChild(renderDiagram(view.rows));
    root.appendChild(renderControls(view, handlers));
}

function renderDiagram(rows: number[]): HTMLElement {
    const board = document.createElement("div");
    const layout = boardLayout(rows);
    board.className = `board board-${layout}`;
    if (layout === "empty") {
        board.textContent = "(empty board)";
        return board;
    }
    const widest = rows[0] ?? 1;
    for (const length of rows) {
        const row = document.createElement("div");
        row.className = "board-row";
        if (layout === "grid") {
            for (let i = 0; i < length; i++) {
                const cell = document.createElement("span");
                cell.className = "cell";
                row.appendChild(cell);
            }
        } else {
            const bar = document.createElement("span");
            bar.className = "bar";
            bar.style.width = `${(100 * length) / widest}%`;
            bar.title = String(length);
            row.appendChild(bar);
        }
        board.appendChild(row);
    }
    return board;
}

function renderControls(view: BoardView, handlers: MoveHandlers): HTMLElement {
    const controls = document.createElement("div");
    controls.className = "controls";
    const winning = new Set(winningMoves(view));
    const labels: Record<MoveToken, string> = {
        L: "Remove left column",
        T: "Remove top row",
    };
    for (const move of ["L", "T"] as MoveToken[]) {
        const button = document.createElement("button");
        button.dataset.move = move;
        button.textContent = labels[move];
        button.disabled = view.finished || view.busy || view.turn !== "human" || !view.sessionId;
        if (view.hint) {
            const badge = document.createElement("span");
            badge.className = "badge";
            badge.textContent = String(view.hint.followers[move].sg);
            button.appendChild(badge);
            if (winning.has(move)) {
                button.classList.add("winning");
                badge.textContent += " ★";
            }
        }
        button.addEventListener("click", () => handlers.onMove(move));
        controls.appendChild(button);
    }
    return controls;
}
