// Canvas rendering and pointer interaction: drag to move, corner handle to
// resize, double-click empty space to add a rectangle.

import { EditorController } from "./controller.js";
import { EditorState } from "./store.js";
import { LayoutDocument, Rect } from "./types.js";

export const HANDLE_PX = 8;

export type HitMode = "move" | "resize";

export interface Hit {
  id: string;
  mode: HitMode;
}

/** Topmost object under a point, in layout coordinates. */
export function hitTest(doc: LayoutDocument, x: number, y: number, handle: number): Hit | null {
  for (let i = doc.objects.length - 1; i >= 0; i--) {
    const o = doc.objects[i];
    const nearCorner =
      Math.abs(x - (o.x + o.w)) <= handle && Math.abs(y - (o.y + o.h)) <= handle;
    if (nearCorner) return { id: o.id, mode: "resize" };
    if (x >= o.x && x <= o.x + o.w && y >= o.y && y <= o.y + o.h) {
      return { id: o.id, mode: "move" };
    }
  }
  return null;
}

interface DragState {
  id: string;
  mode: HitMode;
  startX: number;
  startY: number;
  origin: Rect;
}

export class LayoutCanvas {
  private ctx: CanvasRenderingContext2D;
  private drag: DragState | null = null;
  private scale = 1;

  constructor(
    private canvas: HTMLCanvasElement,
    private controller: EditorController,
  ) {
    this.ctx = canvas.getContext("2d")!;
    canvas.addEventListener("pointerdown", this.onPointerDown);
    canvas.addEventListener("pointermove", this.onPointerMove);
    canvas.addEventListener("pointerup", this.onPointerUp);
    canvas.addEventListener("dblclick", this.onDoubleClick);
    controller.subscribe(() => this.render());
    this.render();
  }

  private layoutPoint(event: PointerEvent | MouseEvent): { x: number; y: number } {
    const bounds = this.canvas.getBoundingClientRect();
    return {
      x: (event.clientX - bounds.left) / this.scale,
      y: (event.clientY - bounds.top) / this.scale,
    };
  }

  private onPointerDown = (event: PointerEvent) => {
    const state = this.controller.state;
    const point = this.layoutPoint(event);
    const hit = hitTest(state.doc, point.x, point.y, HANDLE_PX / this.scale);
    if (!hit) {
      this.controller.selectObject(null);
      return;
    }
    this.canvas.setPointerCapture(event.pointerId);
    const origin = state.doc.objects.find((o) => o.id === hit.id)!;
    this.drag = {
      id: hit.id,
      mode: hit.mode,
      startX: point.x,
      startY: point.y,
      origin: { x: origin.x, y: origin.y, w: origin.w, h: origin.h },
    };
    this.controller.selectObject(hit.id);
  };

  private onPointerMove = (event: PointerEvent) => {
    if (!this.drag) return;
    const point = this.layoutPoint(event);
    const dx = point.x - this.drag.startX;
    const dy = point.y - this.drag.startY;
    const o = this.drag.origin;
    if (this.drag.mode === "move") {
      this.controller.editObject(this.drag.id, { x: o.x + dx, y: o.y + dy, w: o.w, h: o.h });
    } else {
      this.controller.editObject(this.drag.id, { x: o.x, y: o.y, w: o.w + dx, h: o.h + dy });
    }
  };

  private onPointerUp = (event: PointerEvent) => {
    if (this.drag) this.canvas.releasePointerCapture(event.pointerId);
    this.drag = null;
  };

  private onDoubleClick = (event: MouseEvent) => {
    const point = this.layoutPoint(event);
    if (!hitTest(this.controller.state.doc, point.x, point.y, 0)) {
      const frame = this.controller.state.doc.frame;
      const w = Math.max(20, frame.width * 0.1);
      const h = Math.max(20, frame.height * 0.1);
      this.controller.addNewObject({ x: point.x - w / 2, y: point.y - h / 2, w, h });
    }
  };

  render(): void {
    const state: EditorState = this.controller.state;
    const frame = state.doc.frame;
    const maxW = this.canvas.width;
    const maxH = this.canvas.height;
    this.scale = Math.min(maxW / frame.width, maxH / frame.height);

    const ctx = this.ctx;
    ctx.setTransform(1, 0, 0, 1, 0, 0);
    ctx.clearRect(0, 0, maxW, maxH);
    ctx.setTransform(this.scale, 0, 0, this.scale, 0, 0);

    // frame and center lines
    ctx.fillStyle = "#ffffff";
    ctx.fillRect(0, 0, frame.width, frame.height);
    ctx.strokeStyle = "#cfd4dc";
    ctx.lineWidth = 1 / this.scale;
    ctx.strokeRect(0, 0, frame.width, frame.height);
    ctx.setLineDash([4 / this.scale, 4 / this.scale]);
    ctx.beginPath();
    ctx.moveTo(frame.width / 2, 0);
    ctx.lineTo(frame.width / 2, frame.height);
    ctx.moveTo(0, frame.height / 2);
    ctx.lineTo(frame.width, frame.height / 2);
    ctx.stroke();
    ctx.setLineDash([]);

    for (const o of state.doc.objects) {
      const selected = o.id === state.selection;
      const offending = o.id === state.offendingId;
      ctx.fillStyle = offending ? "#ffd9d9" : selected ? "#d6e6ff" : "#e8edf5";
      ctx.strokeStyle = offending ? "#c0392b" : selected ? "#2d6cdf" : "#7a869a";
      ctx.lineWidth = (selected ? 2 : 1) / this.scale;
      ctx.fillRect(o.x, o.y, o.w, o.h);
      ctx.strokeRect(o.x, o.y, o.w, o.h);
      ctx.fillStyle = "#3b4556";
      ctx.font = `${12 / this.scale}px system-ui, sans-serif`;
      ctx.fillText(o.id, o.x + 3 / this.scale, o.y + 13 / this.scale);
      if (selected) {
        const handleSize = HANDLE_PX / this.scale;
        ctx.fillStyle = "#2d6cdf";
        ctx.fillRect(o.x + o.w - handleSize / 2, o.y + o.h - handleSize / 2, handleSize, handleSize);
      }
    }

    // what-if proposal as a ghost overlay
    if (state.proposal) {
      ctx.strokeStyle = "#12915e";
      ctx.lineWidth = 1.5 / this.scale;
      ctx.setLineDash([6 / this.scale, 4 / this.scale]);
      for (const o of state.proposal.layout.objects) {
        ctx.strokeRect(o.x, o.y, o.w, o.h);
      }
      ctx.setLineDash([]);
    }
  }
}
