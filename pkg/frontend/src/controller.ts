// Orchestrates edits, debounced evaluation, and optimizer what-ifs.
//
// Displayed measures only ever come from /api/evaluate responses, tagged
// with the layout revision they were requested for; responses for an older
// revision are discarded, so the display's revision never moves backwards.
// At most one evaluate and one optimize request are in flight at a time.

import { AmaClient, ApiRequestError } from "./api.js";
import { Debounced, debounce } from "./debounce.js";
import {
  EditorState,
  addObject,
  applyObjectRect,
  bumpRevision,
  initialState,
  normalizeDocument,
  removeObject,
} from "./store.js";
import { LayoutDocument, ObjectiveSpec, Rect, SearchParams } from "./types.js";

export type Listener = (state: EditorState) => void;

export interface ControllerOptions {
  debounceMs?: number;
}

export class EditorController {
  readonly state: EditorState;
  private client: AmaClient;
  private listeners: Listener[] = [];
  private scheduleEvaluate: Debounced<[]>;
  private evaluateInFlight = false;
  private evaluateQueued = false;

  constructor(client: AmaClient, doc: LayoutDocument, options: ControllerOptions = {}) {
    this.client = client;
    this.state = initialState(doc);
    this.scheduleEvaluate = debounce(() => {
      void this.requestEvaluate();
    }, options.debounceMs ?? 150);
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private notify(): void {
    for (const listener of this.listeners) listener(this.state);
  }

  selectObject(id: string | null): void {
    this.state.selection = id;
    this.notify();
  }

  /** Move or resize one object; re-evaluation is debounced. */
  editObject(id: string, rect: Rect): void {
    if (!applyObjectRect(this.state, id, rect)) return;
    bumpRevision(this.state);
    this.scheduleEvaluate();
    this.notify();
  }

  addNewObject(rect: Rect): void {
    const obj = addObject(this.state, rect);
    this.state.selection = obj.id;
    bumpRevision(this.state);
    this.scheduleEvaluate();
    this.notify();
  }

  removeSelected(): void {
    if (this.state.selection && removeObject(this.state, this.state.selection)) {
      bumpRevision(this.state);
      this.scheduleEvaluate();
      this.notify();
    }
  }

  /** Replace the whole document (JSON import); evaluates immediately. */
  replaceDocument(doc: LayoutDocument): void {
    this.state.doc = normalizeDocument(doc);
    this.state.selection = null;
    this.state.proposal = null;
    bumpRevision(this.state);
    this.scheduleEvaluate.cancel();
    void this.requestEvaluate();
    this.notify();
  }

  exportDocument(): string {
    return JSON.stringify(this.state.doc, null, 2);
  }

  /** Evaluate the current revision now (initial load, what-if accept). */
  evaluateNow(): Promise<void> {
    this.scheduleEvaluate.cancel();
    return this.requestEvaluate();
  }

  private async requestEvaluate(): Promise<void> {
    if (this.evaluateInFlight) {
      this.evaluateQueued = true;
      return;
    }
    this.evaluateInFlight = true;
    const revision = this.state.revision;
    this.state.pendingEvaluate = true;
    this.notify();
    try {
      const result = await this.client.evaluate(this.state.doc);
      if (revision === this.state.revision) {
        this.state.display = {
          values: result.values,
          literals: result.literals,
          revision,
        };
        this.state.stale = false;
        this.state.lastError = null;
        this.state.offendingId = null;
        this.state.history.push(revision, result.values.av);
      }
      // older-revision responses are dropped: an edit arrived meanwhile and
      // its own evaluation is already queued or scheduled
    } catch (error) {
      if (revision === this.state.revision) {
        this.state.stale = true;
        if (error instanceof ApiRequestError) {
          this.state.lastError = error.message;
          this.state.offendingId = error.body?.object_id ?? null;
        } else {
          this.state.lastError = "service unreachable";
          this.state.offendingId = null;
        }
      }
    } finally {
      this.evaluateInFlight = false;
      this.state.pendingEvaluate = false;
      if (this.evaluateQueued) {
        this.evaluateQueued = false;
        void this.requestEvaluate();
      }
      this.notify();
    }
  }

  /** Ask the optimizer for a proposal; renders as a ghost overlay. */
  async runWhatIf(objective: ObjectiveSpec, params: SearchParams): Promise<void> {
    if (this.state.pendingOptimize) return;
    this.state.pendingOptimize = true;
    this.state.lastError = null;
    const revision = this.state.revision;
    this.notify();
    try {
      const response = await this.client.optimize({
        layout: this.state.doc,
        objective,
        params,
      });
      if (revision === this.state.revision) {
        this.state.proposal = {
          layout: normalizeDocument(response.best_layout),
          score: response.best_score,
          evaluations: response.evaluations,
        };
      }
    } catch (error) {
      this.state.lastError =
        error instanceof ApiRequestError ? error.message : "service unreachable";
    } finally {
      this.state.pendingOptimize = false;
      this.notify();
    }
  }

  /** Adopt the proposal; gauges refresh from a fresh evaluate call. */
  acceptProposal(): void {
    const proposal = this.state.proposal;
    if (!proposal) return;
    this.state.doc = proposal.layout;
    this.state.proposal = null;
    this.state.selection = null;
    bumpRevision(this.state);
    this.scheduleEvaluate.cancel();
    void this.requestEvaluate();
    this.notify();
  }

  rejectProposal(): void {
    if (!this.state.proposal) return;
    this.state.proposal = null;
    this.notify();
  }
}
