/** Wire types for the game service API. */

export type GameKind = "lctr" | "downright" | "lctr-misere";

export type MoveKind = "top_row" | "left_column";

export type Side = "human" | "engine";

export interface GameState {
  id: string;
  game: GameKind;
  base_partition: string;
  partition: string;
  rows: number[];
  offsets: [number, number];
  n: number;
  legal_moves: MoveKind[];
  to_move: Side;
  finished: boolean;
  winner: Side | null;
  history: MoveKind[];
}

export interface NewGameResponse {
  id: string;
  state: GameState;
}

export interface EngineMoveResponse {
  move: MoveKind;
  state: GameState;
}

export interface EvalResult {
  game: GameKind;
  partition: string;
  rows: number[];
  outcome: "P" | "N";
  sg?: number;
  best_moves: MoveKind[];
  winning: boolean;
}

/** Boards above this box count cannot request the grid overlay. */
export const OVERLAY_BOX_LIMIT = 10_000;
