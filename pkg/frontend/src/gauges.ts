// Measure gauges: bars from the parsed values, digits straight from the
// response body literals so what you read is exactly what the service sent.

import { EditorState } from "./store.js";
import { MEASURE_NAMES, MeasureName } from "./types.js";

const LABELS: Record<MeasureName, string> = {
  balance: "Balance",
  equilibrium: "Equilibrium",
  symmetry: "Symmetry",
  sequence: "Sequence",
  rhythm: "Rhythm",
  av: "Aesthetic value",
};

export class GaugePanel {
  private rows = new Map<MeasureName, { bar: HTMLElement; text: HTMLElement }>();
  private badge: HTMLElement;
  private error: HTMLElement;

  constructor(root: HTMLElement) {
    this.badge = document.createElement("div");
    this.badge.className = "stale-badge";
    this.badge.textContent = "stale";
    root.appendChild(this.badge);
    for (const name of MEASURE_NAMES) {
      const row = document.createElement("div");
      row.className = "gauge-row";
      const label = document.createElement("span");
      label.className = "gauge-label";
      label.textContent = LABELS[name];
      const track = document.createElement("div");
      track.className = "gauge-track";
      const bar = document.createElement("div");
      bar.className = "gauge-bar" + (name === "av" ? " gauge-bar-av" : "");
      track.appendChild(bar);
      const text = document.createElement("span");
      text.className = "gauge-value";
      text.textContent = "—";
      row.append(label, track, text);
      root.appendChild(row);
      this.rows.set(name, { bar, text });
    }
    this.error = document.createElement("div");
    this.error.className = "gauge-error";
    root.appendChild(this.error);
  }

  render(state: EditorState): void {
    this.badge.style.visibility = state.stale || state.pendingEvaluate ? "visible" : "hidden";
    this.badge.textContent = state.pendingEvaluate ? "scoring…" : "stale";
    if (state.display) {
      for (const name of MEASURE_NAMES) {
        const row = this.rows.get(name)!;
        row.bar.style.width = `${Math.max(0, Math.min(1, state.display.values[name])) * 100}%`;
        row.text.textContent = state.display.literals[name] ?? String(state.display.values[name]);
      }
    }
    this.error.textContent = state.lastError ?? "";
  }
}
