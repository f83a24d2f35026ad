/** Client-side session state. Nothing here is authoritative: every
 * transition is driven by server responses, so reloading the page and
 * replaying resume() reproduces the same state. */

import { ApiClient, ApiError, NextText, RatingAck, SetProgress } from "./api.js";
import { ALL_METRICS, Labels, Metric, inRange, scaleFor } from "./metrics.js";

export type View = "assignments" | "rating" | "done";

export interface CurrentText {
  textId: string;
  cleanText: string;
  position: number;
  total: number;
}

/** Draft labels for the text on screen, with the completeness gate. */
export class DraftLabels {
  private values = new Map<Metric, number>();

  /** Rejects anything outside the metric's raw scale; the UI never sends
   * out-of-range labels. Returns whether the value was accepted. */
  set(metric: Metric, value: number): boolean {
    if (!inRange(metric, value)) return false;
    this.values.set(metric, value);
    return true;
  }

  get(metric: Metric): number | undefined {
    return this.values.get(metric);
  }

  /** Submission is enabled only once all 8 controls are answered. */
  get complete(): boolean {
    return ALL_METRICS.every((m) => this.values.has(m));
  }

  get missing(): Metric[] {
    return ALL_METRICS.filter((m) => !this.values.has(m));
  }

  toLabels(): Labels {
    if (!this.complete) throw new Error("labels incomplete");
    return Object.fromEntries(
      ALL_METRICS.map((m) => [m, this.values.get(m)!]),
    ) as Labels;
  }

  loadFrom(server: Record<string, number> | null | undefined): void {
    this.values.clear();
    if (!server) return;
    for (const metric of ALL_METRICS) {
      const value = server[metric];
      if (value !== undefined && inRange(metric, value)) {
        this.values.set(metric, value);
      }
    }
  }
}

/** Maps a digit key press onto the focused metric's scale; returns null for
 * keys outside the metric's bounds. */
export function keyToValue(metric: Metric, key: string): number | null {
  if (!/^[0-9]$/.test(key)) return null;
  const value = Number(key);
  return inRange(metric, value) ? value : null;
}

/** Single-writer guard: the second tab that tries to acquire the lock gets
 * read-only mode. Backed by localStorage in the browser, a Map in tests. */
export interface LockStore {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

export class TabLock {
  private readonly key: string;
  private readonly tabId = Math.random().toString(36).slice(2);

  constructor(
    private readonly store: LockStore,
    annotatorId: string,
  ) {
    this.key = `annotator-ui-lock:${annotatorId}`;
  }

  acquire(): boolean {
    const holder = this.store.getItem(this.key);
    if (holder !== null && holder !== this.tabId) return false;
    this.store.setItem(this.key, this.tabId);
    return true;
  }

  release(): void {
    if (this.store.getItem(this.key) === this.tabId) {
      this.store.removeItem(this.key);
    }
  }
}

export class AnnotationSession {
  view: View = "assignments";
  sets: SetProgress[] = [];
  activeSetId: string | null = null;
  current: CurrentText | null = null;
  readonly draft = new DraftLabels();

  constructor(private readonly api: ApiClient) {}

  async start(annotatorId: string, token = ""): Promise<void> {
    await this.api.openSession(annotatorId, token);
    await this.refreshAssignments();
  }

  async refreshAssignments(): Promise<void> {
    this.sets = await this.api.assignments();
    this.view = "assignments";
  }

  /** Resume exactly where the server says we were: same set, same position,
   * drafts intact. */
  async resume(): Promise<void> {
    const state = await this.api.resume();
    this.sets = state.pending;
    if (state.set_id === null) {
      this.activeSetId = null;
      this.current = null;
      this.view = "assignments";
      return;
    }
    await this.openSet(state.set_id);
  }

  async openSet(setId: string): Promise<void> {
    this.activeSetId = setId;
    const next = await this.api.nextText(setId);
    this.applyNext(next);
  }

  private applyNext(next: NextText): void {
    if (next.text_id === null) {
      this.current = null;
      this.view = "done";
      return;
    }
    this.current = {
      textId: next.text_id,
      cleanText: next.clean_text ?? "",
      position: next.position,
      total: next.total,
    };
    this.draft.loadFrom(next.draft);
    this.view = "rating";
  }

  get canSubmit(): boolean {
    return this.current !== null && this.draft.complete;
  }

  /** Submit the finished text and advance to the next one. */
  async submitFinal(): Promise<RatingAck> {
    if (this.current === null || this.activeSetId === null) {
      throw new Error("no text on screen");
    }
    if (!this.draft.complete) {
      throw new Error(`incomplete: ${this.draft.missing.join(", ")}`);
    }
    let ack: RatingAck;
    try {
      ack = await this.api.submitRating(
        this.current.textId,
        this.activeSetId,
        this.draft.toLabels(),
        true,
      );
    } catch (err) {
      if (err instanceof ApiError && err.code === "NotAssigned") {
        await this.refreshAssignments();
      }
      throw err;
    }
    const next = await this.api.nextText(this.activeSetId);
    this.applyNext(next);
    return ack;
  }

  /** Persist the on-screen labels as a server-side draft (no advance). */
  async saveDraft(): Promise<void> {
    if (this.current === null || this.activeSetId === null) return;
    const partial: Record<string, number> = {};
    for (const metric of ALL_METRICS) {
      const value = this.draft.get(metric);
      if (value !== undefined) partial[metric] = value;
    }
    // the server stores full vectors only; a draft becomes persistable once
    // every control is answered (resume restores it exactly)
    if (Object.keys(partial).length === ALL_METRICS.length) {
      await this.api.submitRating(
        this.current.textId,
        this.activeSetId,
        partial,
        false,
      );
    }
  }

  async postpone(): Promise<void> {
    if (this.activeSetId === null) return;
    if (this.draft.complete) await this.saveDraft();
    await this.api.postpone(this.activeSetId);
    await this.refreshAssignments();
  }
}

export { ALL_METRICS, inRange, scaleFor };
export type { Labels, Metric };
