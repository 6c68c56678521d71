// Editor state and the pure update helpers the controller drives.

import {
  FrameDoc,
  LayoutDocument,
  MeasureName,
  MeasureVector,
  ObjectDoc,
  Rect,
} from "./types.js";

export const MIN_OBJECT_SIZE = 1;

export interface MeasureDisplay {
  values: MeasureVector;
  /** verbatim number literals from the service response body */
  literals: Record<MeasureName, string>;
  revision: number;
}

export interface Proposal {
  layout: LayoutDocument;
  score: number;
  evaluations: number;
}

export interface OptimizerPanel {
  mode: "maximize" | "match_target";
  targetAv: number;
  seed: number;
  iterations: number;
}

/** Fixed-capacity ring buffer of (revision, av) score samples. */
export class ScoreHistory {
  private slots: Array<{ revision: number; av: number }>;
  private next = 0;
  private count = 0;

  constructor(readonly capacity = 64) {
    this.slots = new Array(capacity);
  }

  push(revision: number, av: number): void {
    this.slots[this.next] = { revision, av };
    this.next = (this.next + 1) % this.capacity;
    if (this.count < this.capacity) this.count += 1;
  }

  /** Oldest to newest. */
  samples(): Array<{ revision: number; av: number }> {
    const out: Array<{ revision: number; av: number }> = [];
    const start = (this.next - this.count + this.capacity) % this.capacity;
    for (let i = 0; i < this.count; i++) {
      out.push(this.slots[(start + i) % this.capacity]);
    }
    return out;
  }
}

export interface EditorState {
  doc: LayoutDocument;
  selection: string | null;
  revision: number;
  display: MeasureDisplay | null;
  /** display does not correspond to the current revision (edit or error) */
  stale: boolean;
  pendingEvaluate: boolean;
  pendingOptimize: boolean;
  lastError: string | null;
  offendingId: string | null;
  proposal: Proposal | null;
  panel: OptimizerPanel;
  history: ScoreHistory;
}

export function initialState(doc: LayoutDocument): EditorState {
  return {
    doc: normalizeDocument(doc),
    selection: null,
    revision: 0,
    display: null,
    stale: true,
    pendingEvaluate: false,
    pendingOptimize: false,
    lastError: null,
    offendingId: null,
    proposal: null,
    panel: { mode: "maximize", targetAv: 0.9, seed: 0, iterations: 5000 },
    history: new ScoreHistory(),
  };
}

export function normalizeDocument(doc: LayoutDocument): LayoutDocument {
  return {
    schema_version: doc.schema_version ?? 1,
    frame: { width: doc.frame.width, height: doc.frame.height },
    objects: doc.objects.map((o) => ({ id: o.id, x: o.x, y: o.y, w: o.w, h: o.h })),
  };
}

/** Clamp a rect inside the frame, enforcing the minimum size. */
export function clampRect(frame: FrameDoc, rect: Rect): Rect {
  let w = Math.max(MIN_OBJECT_SIZE, Math.min(rect.w, frame.width));
  let h = Math.max(MIN_OBJECT_SIZE, Math.min(rect.h, frame.height));
  let x = Math.min(Math.max(rect.x, 0), frame.width - w);
  let y = Math.min(Math.max(rect.y, 0), frame.height - h);
  return { x, y, w, h };
}

/** Apply a clamped rect to one object; returns false when nothing changed. */
export function applyObjectRect(state: EditorState, id: string, rect: Rect): boolean {
  const target = state.doc.objects.find((o) => o.id === id);
  if (!target) return false;
  const clamped = clampRect(state.doc.frame, rect);
  if (
    target.x === clamped.x &&
    target.y === clamped.y &&
    target.w === clamped.w &&
    target.h === clamped.h
  ) {
    return false;
  }
  target.x = clamped.x;
  target.y = clamped.y;
  target.w = clamped.w;
  target.h = clamped.h;
  return true;
}

export function bumpRevision(state: EditorState): void {
  state.revision += 1;
  state.stale = true;
}

export function freshObjectId(doc: LayoutDocument): string {
  const used = new Set(doc.objects.map((o) => o.id));
  let n = doc.objects.length + 1;
  while (used.has(`obj${n}`)) n += 1;
  return `obj${n}`;
}

export function addObject(state: EditorState, rect: Rect): ObjectDoc {
  const clamped = clampRect(state.doc.frame, rect);
  const obj: ObjectDoc = { id: freshObjectId(state.doc), ...clamped };
  state.doc.objects.push(obj);
  return obj;
}

export function removeObject(state: EditorState, id: string): boolean {
  const before = state.doc.objects.length;
  state.doc.objects = state.doc.objects.filter((o) => o.id !== id);
  if (state.selection === id) state.selection = null;
  return state.doc.objects.length !== before;
}
