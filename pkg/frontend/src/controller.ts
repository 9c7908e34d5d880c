/** Game flow: every state change round-trips to the server (no optimistic UI). */

import { ApiClient, ApiError } from "./api";
import { boardModel, renderBoard, statusText } from "./board";
import type { GameKind, GameState, MoveKind } from "./types";
import { OVERLAY_BOX_LIMIT } from "./types";

export interface ControllerElements {
  board: HTMLElement;
  status: HTMLElement;
  toast: HTMLElement;
  engineButton: HTMLButtonElement;
  overlayToggle: HTMLInputElement;
  misereNote: HTMLElement;
}

export class GameController {
  state: GameState | null = null;
  overlayText: string | null = null;
  overlayWanted = false;

  constructor(
    readonly api: ApiClient,
    readonly el: ControllerElements,
  ) {}

  async newGame(partition: string, game: GameKind, humanFirst: boolean): Promise<void> {
    const created = await this.api.newGame(partition, game, humanFirst);
    this.state = created.state;
    this.overlayText = null;
    await this.refreshOverlay();
    this.render();
  }

  /** Human move; only called with kinds the server listed as legal. */
  async submitMove(kind: MoveKind): Promise<void> {
    if (!this.state) {
      return;
    }
    try {
      this.state = await this.api.submitMove(this.state.id, kind);
    } catch (err) {
      this.surface(err);
      return;
    }
    await this.refreshOverlay();
    this.render();
  }

  async requestEngineMove(): Promise<void> {
    if (!this.state) {
      return;
    }
    try {
      const reply = await this.api.engineMove(this.state.id);
      this.state = reply.state;
    } catch (err) {
      this.surface(err);
      return;
    }
    await this.refreshOverlay();
    this.render();
  }

  async setOverlay(wanted: boolean): Promise<void> {
    this.overlayWanted = wanted;
    await this.refreshOverlay();
    this.render();
  }

  overlayAvailable(): boolean {
    return this.state !== null && this.state.n <= OVERLAY_BOX_LIMIT;
  }

  private async refreshOverlay(): Promise<void> {
    const state = this.state;
    if (!state || !this.overlayWanted || !this.overlayAvailable() || state.rows.length === 0) {
      this.overlayText = null;
      return;
    }
    try {
      this.overlayText = await this.api.evalGrid(state.partition, state.game);
    } catch (err) {
      this.overlayText = null;
      this.surface(err);
    }
  }

  private surface(err: unknown): void {
    if (err instanceof ApiError && err.status === 409) {
      this.toast(`Not allowed: ${err.message}`);
    } else if (err instanceof ApiError) {
      this.toast(`${err.code}: ${err.message}`);
    } else {
      this.toast(String(err));
    }
  }

  toast(message: string): void {
    this.el.toast.textContent = message;
    this.el.toast.classList.add("visible");
  }

  render(): void {
    const state = this.state;
    if (!state) {
      return;
    }
    this.el.toast.textContent = "";
    this.el.toast.classList.remove("visible");
    const model = boardModel(state, this.overlayText);
    this.el.board.replaceChildren(renderBoard(model, (kind) => void this.submitMove(kind)));
    this.el.status.textContent = statusText(model);
    this.el.engineButton.disabled = state.finished || state.to_move !== "engine";
    this.el.overlayToggle.disabled = !this.overlayAvailable();
    // Misère reverses the goal; keep that impossible to miss.
    this.el.misereNote.hidden = state.game !== "lctr-misere";
  }
}
