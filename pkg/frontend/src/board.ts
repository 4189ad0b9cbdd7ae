/**
 * Review-board state. All question state lives server-side: every decision
 * posts to the service and the card is replaced by the server's response.
 * A 409 means another session got there first; the board then refreshes from
 * the server and surfaces a notice instead of merging anything silently.
 */

import { ApiError, type Mcq, type QuizforgeApi } from "./api.js";

export type Decision = "accept" | "reject";

export interface Card {
  mcq: Mcq;
  busy: boolean;
  notice: string | null;
}

export interface BoardCounts {
  accepted: number;
  rejected: number;
  remaining: number;
}

export class ReviewBoard {
  cards: Card[] = [];
  private listeners: Array<() => void> = [];

  constructor(
    private readonly api: QuizforgeApi,
    readonly materialId: string,
  ) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  async load(): Promise<void> {
    const questions = await this.api.questions(this.materialId);
    this.cards = questions.map((mcq) => ({ mcq, busy: false, notice: null }));
    this.notify();
  }

  card(questionId: string): Card | undefined {
    return this.cards.find((c) => c.mcq.id === questionId);
  }

  counts(): BoardCounts {
    let accepted = 0;
    let rejected = 0;
    let remaining = 0;
    for (const { mcq } of this.cards) {
      if (mcq.status === "accepted") accepted += 1;
      else if (mcq.status === "rejected") rejected += 1;
      else remaining += 1;
    }
    return { accepted, rejected, remaining };
  }

  async decide(questionId: string, decision: Decision): Promise<void> {
    const card = this.card(questionId);
    if (!card || card.busy || card.mcq.status !== "suggested") return;
    card.busy = true;
    this.notify();
    try {
      card.mcq =
        decision === "accept"
          ? await this.api.accept(questionId)
          : await this.api.reject(questionId);
      card.notice = null;
    } catch (err) {
      if (err instanceof ApiError && err.isConflict) {
        await this.refreshFromServer(questionId, "Already reviewed in another session.");
      } else {
        card.notice = err instanceof Error ? err.message : String(err);
      }
    } finally {
      card.busy = false;
      this.notify();
    }
  }

  /** Pull server state for every card; mark the conflicted one. */
  private async refreshFromServer(conflictId: string, notice: string): Promise<void> {
    const fresh = new Map(
      (await this.api.questions(this.materialId)).map((q) => [q.id, q]),
    );
    for (const card of this.cards) {
      const updated = fresh.get(card.mcq.id);
      if (updated) card.mcq = updated;
    }
    const conflicted = this.card(conflictId);
    if (conflicted) conflicted.notice = notice;
  }
}
