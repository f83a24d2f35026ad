/** Thin DOM layer: renders the current AnnotationSession state into a root
 * element and wires clicks/keys back into it. All logic lives in state.ts. */

import { ApiClient } from "./api.js";
import { ALL_METRICS, METRIC_NAMES_PL, Metric, scaleFor } from "./metrics.js";
import { AnnotationSession, TabLock, keyToValue } from "./state.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  text?: string,
  className?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (text !== undefined) node.textContent = text;
  if (className !== undefined) node.className = className;
  return node;
}

export class App {
  private readonly session: AnnotationSession;
  private readonly lock: TabLock;
  private focusedMetric: Metric = ALL_METRICS[0];

  constructor(
    private readonly root: HTMLElement,
    baseUrl: string,
    private readonly annotatorId: string,
    token = "",
  ) {
    this.session = new AnnotationSession(new ApiClient(baseUrl));
    this.lock = new TabLock(window.localStorage, annotatorId);
    void this.boot(token);
  }

  private async boot(token: string): Promise<void> {
    if (!this.lock.acquire()) {
      this.root.replaceChildren(
        el("p", "Sesja otwarta w innej karcie — tryb tylko do odczytu.", "warning"),
      );
      return;
    }
    window.addEventListener("beforeunload", () => this.lock.release());
    window.addEventListener("keydown", (event) => this.onKey(event));
    await this.session.start(this.annotatorId, token);
    await this.session.resume();
    this.render();
  }

  private onKey(event: KeyboardEvent): void {
    if (this.session.view !== "rating") return;
    const value = keyToValue(this.focusedMetric, event.key);
    if (value !== null) {
      this.session.draft.set(this.focusedMetric, value);
      this.render();
    }
  }

  private render(): void {
    switch (this.session.view) {
      case "assignments":
        this.renderAssignments();
        break;
      case "rating":
        this.renderRating();
        break;
      case "done":
        this.root.replaceChildren(el("p", "Zestaw ukończony — dziękujemy!"));
        break;
    }
  }

  private renderAssignments(): void {
    const list = el("ul");
    for (const set of this.session.sets) {
      const item = el("li", `${set.set_id}: ${set.done}/${set.total}`);
      const button = el("button", "Otwórz");
      button.addEventListener("click", () => {
        void this.session.openSet(set.set_id).then(() => this.render());
      });
      item.append(" ", button);
      list.append(item);
    }
    this.root.replaceChildren(el("h2", "Twoje zestawy"), list);
  }

  private renderRating(): void {
    const current = this.session.current;
    if (current === null) return;
    const header = el(
      "p",
      `Tekst ${current.position + 1} z ${current.total}`,
      "progress",
    );
    const text = el("blockquote", current.cleanText);
    const controls = el("div", undefined, "controls");
    for (const metric of ALL_METRICS) {
      const row = el("div", undefined, "metric-row");
      row.append(el("span", METRIC_NAMES_PL[metric]));
      const [lo, hi] = scaleFor(metric);
      for (let value = lo; value <= hi; value += 1) {
        const button = el(
          "button",
          String(value),
          this.session.draft.get(metric) === value ? "chosen" : "",
        );
        button.addEventListener("click", () => {
          this.focusedMetric = metric;
          this.session.draft.set(metric, value);
          this.render();
        });
        row.append(button);
      }
      controls.append(row);
    }
    const submit = el("button", "Dalej", "submit");
    submit.disabled = !this.session.canSubmit;
    submit.addEventListener("click", () => {
      void this.session.submitFinal().then(() => this.render());
    });
    const postpone = el("button", "Odłóż na później", "postpone");
    postpone.addEventListener("click", () => {
      void this.session.postpone().then(() => this.render());
    });
    this.root.replaceChildren(header, text, controls, submit, postpone);
  }
}
