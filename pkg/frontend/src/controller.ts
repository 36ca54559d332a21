import { ApiError, type PlayServiceClient } from "./api.js";
import type { EngineRole, GameState, Hint, MoveToken, Winner } from "./types.js";

export interface BoardView {
    sessionId: string | null;
    rows: number[];
    turn: "human" | null;
    finished: boolean;
    winner: Winner | null;
    engineRole: EngineRole;
    /** Server-reported values for both moves; null while the overlay is off. */
    hint: Hint | null;
    /** Last non-blocking problem (rejected move, bad input); cleared on success. */
    notice: string | null;
    /** A move request is in flight; further clicks are dropped. */
    busy: boolean;
}

function emptyView(): BoardView {
    return {
        sessionId: null,
        rows: [],
        turn: null,
        finished: false,
        winner: null,
        engineRole: "plays_second",
        hint: null,
        notice: null,
        busy: false,
    };
}

/** Moves the server reported as leading to a value-0 position. */
export function winningMoves(view: BoardView): MoveToken[] {
    if (!view.hint) return [];
    return (Object.keys(view.hint.followers) as MoveToken[]).filter(
        (move) => view.hint!.followers[move].sg === 0,
    );
}

export class GameController {
    private view: BoardView = emptyView();

    constructor(
        private readonly api: PlayServiceClient,
        private readonly onChange: (view: BoardView) => void = () => {},
    ) {}

    getView(): BoardView {
        return this.view;
    }

    /** Create a game from partition text; 422s surface as an inline notice. */
    async startGame(startText: string, engineRole: EngineRole): Promise<BoardView> {
        try {
            const created = await this.api.createGame(startText, engineRole);
            this.view = { ...emptyView(), engineRole };
            this.view.sessionId = created.id;
            this.applyState(created.state);
        } catch (error) {
            this.view = { ...this.view, notice: describe(error) };
        }
        return this.emit();
    }

    /**
     * Submit the human move.  Clicks while a request is in flight, after the
     * game ended, or before a game exists are dropped without a request.
     */
    async submitMove(move: MoveToken): Promise<BoardView> {
        const sessionId = this.view.sessionId;
        if (!sessionId || this.view.busy || this.view.finished || this.view.turn !== "human") {
            return this.view;
        }
        this.view = { ...this.view, busy: true };
        this.emit();
        try {
            const state = await this.api.postMove(sessionId, move);
            this.applyState(state);
            if (this.view.hint && !this.view.finished) {
                await this.refreshHint();
            } else {
                this.view.hint = null;
            }
        } catch (error) {
            this.view = { ...this.view, notice: describe(error) };
        }
        this.view = { ...this.view, busy: false };
        return this.emit();
    }

    /** Show or hide the per-move value badges; fetch failures leave them hidden. */
    async toggleHints(): Promise<BoardView> {
        if (!this.view.sessionId || this.view.finished) return this.view;
        if (this.view.hint) {
            this.view = { ...this.view, hint: null };
        } else {
            await this.refreshHint();
        }
        return this.emit();
    }

    private async refreshHint(): Promise<void> {
        if (!this.view.sessionId) return;
        try {
            const hint = await this.api.getHint(this.view.sessionId);
            this.view = { ...this.view, hint };
        } catch {
            this.view = { ...this.view, hint: null };
        }
    }

    private applyState(state: GameState): void {
        this.view = {
            ...this.view,
            rows: state.rows,
            turn: state.turn,
            finished: state.finished,
            winner: state.winner,
            engineRole: state.engine_role,
            notice: null,
        };
    }

    private emit(): BoardView {
        this.onChange(this.view);
        return this.view;
    }
}

function describe(error: unknown): string {
    if (error instanceof ApiError) return error.message;
    if (error instanceof Error) return error.message;
    return String(error);
}
