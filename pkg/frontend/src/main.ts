/** Page bootstrap: new-game form wiring. */

import { ApiClient } from "./api";
import { GameController } from "./controller";
import type { GameKind } from "./types";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) {
    throw new Error(`missing element #${id}`);
  }
  return el as T;
}

export function bootstrap(baseUrl = ""): GameController {
  const controller = new GameController(new ApiClient(baseUrl), {
    board: byId("board"),
    status: byId("status"),
    toast: byId("toast"),
    engineButton: byId<HTMLButtonElement>("engine-move"),
    overlayToggle: byId<HTMLInputElement>("overlay-toggle"),
    misereNote: byId("misere-note"),
  });

  byId<HTMLFormElement>("new-game").addEventListener("submit", (event) => {
    event.preventDefault();
    const partition = byId<HTMLInputElement>("partition").value;
    const game = byId<HTMLSelectElement>("game").value as GameKind;
    const humanFirst = byId<HTMLSelectElement>("first").value === "human";
    controller.newGame(partition, game, humanFirst).catch((err) => controller.toast(String(err)));
  });

  byId<HTMLButtonElement>("engine-move").addEventListener("click", () => {
    void controller.requestEngineMove();
  });

  byId<HTMLInputElement>("overlay-toggle").addEventListener("change", (event) => {
    void controller.setOverlay((event.target as HTMLInputElement).checked);
  });

  return controller;
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  bootstrap();
}
