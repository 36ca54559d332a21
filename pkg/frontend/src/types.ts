// Wire types of the play service; the client renders these verbatim and
// never computes game values itself.

export type EngineRole = "none" | "plays_first" | "plays_second";
export type MoveToken = "L" | "T";
export type Actor = "human" | "engine";
export type Winner = "human" | "engine" | "mover";

export interface HistoryEntry {
    actor: Actor;
    move: MoveToken;
    resulting: number[];
}

export interface GameState {
    id: string;
    start: number[];
    position: number[];
    rows: number[];
    turn: "human" | null;
    finished: boolean;
    winner: Winner | null;
    engine_role: EngineRole;
    history: HistoryEntry[];
}

export interface CreateGameResponse {
    id: string;
    state: GameState;
}

export interface FollowerInfo {
    partition: number[];
    sg: number;
}

export interface Hint {
    sg: number;
    outcome: "N" | "P";
    followers: Record<MoveToken, FollowerInfo>;
}
