import { describe, expect, it, vi } from "vitest";

import { boardModel, parseGridText, renderBoard, statusText } from "../src/board";
import type { GameState } from "../src/types";

function state(overrides: Partial<GameState> = {}): GameState {
  return {
    id: "s1",
    game: "lctr",
    base_partition: "3,2,1",
    partition: "3,2,1",
    rows: [3, 2, 1],
    offsets: [0, 0],
    n: 6,
    legal_moves: ["top_row", "left_column"],
    to_move: "human",
    finished: false,
    winner: null,
    history: [],
    ...overrides,
  };
}

describe("parseGridText", () => {
  it("splits lines into cells and keeps empty grids empty", () => {
    expect(parseGridText("0 1 0\n2 0\n1")).toEqual([["0", "1", "0"], ["2", "0"], ["1"]]);
    expect(parseGridText("")).toEqual([]);
  });
});

describe("boardModel", () => {
  it("rejects increasing rows", () => {
    expect(() => boardModel(state({ rows: [2, 3] }))).toThrow(/non-increasing/);
  });

  it("rejects overlays whose shape differs from the board", () => {
    expect(() => boardModel(state(), "0 1\n0")).toThrow(/overlay/);
    expect(boardModel(state(), "0 1 0\n2 0\n1").overlay).toEqual([["0", "1", "0"], ["2", "0"], ["1"]]);
  });

  it("maps finished states to won/lost from the human point of view", () => {
    expect(boardModel(state()).status).toBe("running");
    expect(boardModel(state({ finished: true, winner: "human" })).status).toBe("won");
    expect(boardModel(state({ finished: true, winner: "engine" })).status).toBe("lost");
  });
});

describe("statusText", () => {
  it("announces turns and outcomes", () => {
    expect(statusText(boardModel(state()))).toBe("Your move.");
    expect(statusText(boardModel(state({ to_move: "engine" })))).toBe("Engine to move.");
    expect(statusText(boardModel(state({ finished: true, winner: "human" })))).toBe("You win!");
    expect(statusText(boardModel(state({ finished: true, winner: "engine" })))).toBe("Engine wins.");
  });
});

describe("renderBoard", () => {
  it("draws left-justified rows with the right box counts", () => {
    const root = renderBoard(boardModel(state()), () => {});
    const rows = [...root.querySelectorAll(".row")].map((row) => row.querySelectorAll(".box").length);
    expect(rows).toEqual([3, 2, 1]);
  });

  it("makes the top row and left column clickable for their moves", () => {
    const onMove = vi.fn();
    const root = renderBoard(boardModel(state()), onMove);
    const topTargets = root.querySelectorAll(".target-top");
    const leftTargets = root.querySelectorAll(".target-left");
    expect(topTargets.length).toBe(3); // whole top row, corner included
    expect(leftTargets.length).toBe(2); // left column below the corner
    (topTargets[0] as HTMLElement).click();
    (leftTargets[0] as HTMLElement).click();
    expect(onMove.mock.calls).toEqual([["top_row"], ["left_column"]]);
  });

  it("only offers moves the server listed", () => {
    const singleColumn = state({ game: "downright", rows: [1, 1], legal_moves: ["top_row"] });
    const root = renderBoard(boardModel(singleColumn), () => {});
    expect(root.querySelectorAll(".target-top").length).toBe(1);
    expect(root.querySelectorAll(".target-left").length).toBe(0);
  });

  it("offers nothing while the engine thinks or after the game ends", () => {
    for (const s of [state({ to_move: "engine" }), state({ finished: true, winner: "engine", legal_moves: [] })]) {
      const root = renderBoard(boardModel(s), () => {});
      expect(root.querySelectorAll(".target-top, .target-left").length).toBe(0);
    }
  });

  it("marks the rook on Downright boards", () => {
    const root = renderBoard(boardModel(state({ game: "downright" })), () => {});
    const first = root.querySelector(".box");
    expect(first?.classList.contains("rook")).toBe(true);
    expect(renderBoard(boardModel(state()), () => {}).querySelector(".rook")).toBeNull();
  });

  it("shows a terminal banner on the empty board", () => {
    const finished = state({ rows: [], partition: "", n: 0, finished: true, winner: "human", legal_moves: [] });
    const root = renderBoard(boardModel(finished), () => {});
    expect(root.querySelector(".banner")?.textContent).toBe("You win!");
  });

  it("writes overlay digits into the boxes", () => {
    const root = renderBoard(boardModel(state(), "0 1 0\n2 0\n1"), () => {});
    const digits = [...root.querySelectorAll(".box")].map((box) => box.textContent);
    expect(digits).toEqual(["0", "1", "0", "2", "0", "1"]);
  });
});
