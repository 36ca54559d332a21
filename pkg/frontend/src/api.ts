import type { CreateGameResponse, EngineRole, GameState, Hint, MoveToken } from "./types.js";

export class ApiError extends Error {
    constructor(readonly status: number, message: string) {
        super(message);
        this.name = "ApiError";
    }
}

/** What the controller needs from the service; GameApi is the real one. */
export interface PlayServiceClient {
    createGame(start: string, engineRole: EngineRole): Promise<CreateGameResponse>;
    getState(id: string): Promise<GameState>;
    postMove(id: string, move: MoveToken): Promise<GameState>;
    getHint(id: string): Promise<Hint>;
}

/** Thin typed wrapper over the four service endpoints. */
export class GameApi implements PlayServiceClient {
    constructor(private readonly baseUrl: string = "") {}

    async createGame(start: string, engineRole: EngineRole): Promise<CreateGameResponse> {
        return this.request<CreateGameResponse>("/games", {
            method: "POST",
            body: JSON.stringify({ start, engine_role: engineRole }),
        });
    }

    async getState(id: string): Promise<GameState> {
        return this.request<GameState>(`/games/${id}`);
    }

    async postMove(id: string, move: MoveToken): Promise<GameState> {
        return this.request<GameState>(`/games/${id}/moves`, {
            method: "POST",
            body: JSON.stringify({ move }),
        });
    }

    async getHint(id: string): Promise<Hint> {
        return this.request<Hint>(`/games/${id}/hint`);
    }

    private async request<T>(path: string, init?: RequestInit): Promise<T> {
        const response = await fetch(this.baseUrl + path, {
            headers: { "content-type": "application/json" },
            ...init,
        });
        let body: unknown = null;
        try {
            body = await response.json();
        } catch {
            body = null;
        }
        if (!response.ok) {
            const message =
                body && typeof body === "object" && "error" in body
                    ? String((body as { error: unknown }).error)
                    : `${response.status} ${response.statusText}`;
            throw new ApiError(response.status, message);
        }
        return body as T;
    }
}
