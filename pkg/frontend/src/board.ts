/** Board model and DOM rendering: left-justified box rows with move targets. */

import type { GameKind, GameState, MoveKind, Side } from "./types";

export type BoardStatus = "running" | "won" | "lost";

export interface BoardModel {
  game: GameKind;
  rows: number[];
  legalMoves: MoveKind[];
  toMove: Side;
  overlay: string[][] | null;
  status: BoardStatus;
}

/** Split a grid dump (one line per diagram row, space-separated) into cells. */
export function parseGridText(text: string): string[][] {
  if (text === "") {
    return [];
  }
  return text.split("\n").map((line) => line.split(" "));
}

export function boardModel(state: GameState, overlayText: string | null = null): BoardModel {
  for (let k = 1; k < state.rows.length; k++) {
    const prev = state.rows[k - 1]!;
    const cur = state.rows[k]!;
    if (cur > prev) {
      throw new Error(`rows must be non-increasing, got ${state.rows.join(",")}`);
    }
  }
  let overlay: string[][] | null = null;
  if (overlayText !== null) {
    overlay = parseGridText(overlayText);
    if (overlay.length !== state.rows.length || overlay.some((row, i) => row.length !== state.rows[i])) {
      throw new Error("overlay dimensions do not match the board");
    }
  }
  const status: BoardStatus = !state.finished ? "running" : state.winner === "human" ? "won" : "lost";
  return {
    game: state.game,
    rows: state.rows,
    legalMoves: state.legal_moves,
    toMove: state.to_move,
    overlay,
    status,
  };
}

export function statusText(model: BoardModel): string {
  if (model.status === "running") {
    return model.toMove === "human" ? "Your move." : "Engine to move.";
  }
  return model.status === "won" ? "You win!" : "Engine wins.";
}

/**
 * Render the diagram. The whole top row triggers a top-row move and the
 * whole left column a left-column move; the shared corner box falls to the
 * top-row move (same destination whenever both are legal). Only moves in
 * legalMoves become click targets, so the server can never reject a click.
 */
export function renderBoard(model: BoardModel, onMove: (kind: MoveKind) => void): HTMLElement {
  const root = document.createElement("div");
  root.className = "board";
  if (model.rows.length === 0) {
    const banner = document.createElement("div");
    banner.className = "banner";
    banner.textContent = statusText(model);
    root.appendChild(banner);
    return root;
  }
  const canTop = model.status === "running" && model.toMove === "human" && model.legalMoves.includes("top_row");
  const canLeft = model.status === "running" && model.toMove === "human" && model.legalMoves.includes("left_column");
  model.rows.forEach((width, i) => {
    const rowEl = document.createElement("div");
    rowEl.className = "row";
    for (let j = 0; j < width; j++) {
      const box = document.createElement("span");
      box.className = "box";
      if (model.game === "downright" && i === 0 && j === 0) {
        box.classList.add("rook");
      }
      if (model.overlay) {
        box.textContent = model.overlay[i]![j]!;
        box.classList.add("overlaid");
      }
      const isTopTarget = canTop && i === 0;
      const isLeftTarget = canLeft && j === 0 && !(i === 0 && canTop);
      if (isTopTarget) {
        box.classList.add("target-top");
        box.addEventListener("click", () => onMove("top_row"));
      } else if (isLeftTarget) {
        box.classList.add("target-left");
        box.addEventListener("click", () => onMove("left_column"));
      }
      rowEl.appendChild(box);
    }
    rowEl.appendChild(document.createElement("br"));
    root.appendChild(rowEl);
  });
  if (model.status !== "running") {
    const banner = document.createElement("div");
    banner.className = "banner";
    banner.textContent = statusText(model);
    root.appendChild(banner);
  }
  return root;
}
