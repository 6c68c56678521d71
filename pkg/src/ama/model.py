"""Layout domain model: frame, objects, and the quadrant decomposition.

The frame uses screen coordinates (origin top-left, y grows downward).
Every measure downstream works on the portions produced by cutting each
object at the frame's vertical and horizontal center lines, so the
splitting rule here is the single source of truth for quadrant geometry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import EmptyLayoutError, ValidationError

# Divisor floor for the deviation-ratio family; kept portions always have
# nonzero centroid offsets, this only guards against sub-ulp slivers.
THETA_EPS = 1e-12


class Quadrant(Enum):
    """Frame quadrants in reading order."""

    UL = 0
    UR = 1
    LL = 2
    LR = 3


QUADRANTS = (Quadrant.UL, Quadrant.UR, Quadrant.LL, Quadrant.LR)


@dataclass(frozen=True)
class Frame:
    width: float
    height: float

    def __post_init__(self):
        if not (self.width > 0 and self.height > 0):
            raise ValidationError(
                f"frame dimensions must be positive, got {self.width}x{self.height}"
            )

    def center(self) -> tuple[float, float]:
        return (self.width / 2.0, self.height / 2.0)


@dataclass(frozen=True)
class LayoutObject:
    id: str
    x: float
    y: float
    w: float
    h: float

    def __post_init__(self):
        if not (self.w > 0 and self.h > 0):
            raise ValidationError(
                f"object {self.id!r} has nonpositive extent {self.w}x{self.h}",
                object_id=self.id,
            )

    @property
    def area(self) -> float:
        return self.w * self.h

    def center(self) -> tuple[float, float]:
        return (self.x + self.w / 2.0, self.y + self.h / 2.0)


@dataclass(frozen=True)
class Layout:
    frame: Frame
    objects: tuple[LayoutObject, ...]

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        seen = set()
        for obj in self.objects:
            if obj.id in seen:
                raise ValidationError(f"duplicate object id {obj.id!r}", object_id=obj.id)
            seen.add(obj.id)
            if (
                obj.x < 0
                or obj.y < 0
                or obj.x + obj.w > self.frame.width
                or obj.y + obj.h > self.frame.height
            ):
                raise ValidationError(
                    f"object {obj.id!r} extends outside the {self.frame.width}x"
                    f"{self.frame.height} frame",
                    object_id=obj.id,
                )

    def require_objects(self):
        if not self.objects:
            raise EmptyLayoutError("layout has no objects")


@dataclass(frozen=True)
class Portion:
    """One axis-split piece of an object, confined to a single quadrant."""

    quadrant: Quadrant
    area: float
    cx: float
    cy: float
    pw: float
    ph: float
    owner: str


@dataclass(frozen=True)
class QuadrantAggregates:
    """Per-quadrant sums over portions, each a 4-tuple in reading order.

    x, y: summed |centroid - center| offsets; h, b: summed portion heights
    and widths; theta: summed |dy|/|dx| ratios; r: summed radial centroid
    distances; a: summed areas.
    """

    x: tuple[float, float, float, float]
    y: tuple[float, float, float, float]
    h: tuple[float, float, float, float]
    b: tuple[float, float, float, float]
    theta: tuple[float, float, float, float]
    r: tuple[float, float, float, float]
    a: tuple[float, float, float, float]


def split_rects(frame_w: float, frame_h: float, rects) -> list:
    """Cut (x, y, w, h) rects at the center lines.

    Returns (quadrant_index, area, cx, cy, pw, ph, owner_index) tuples.
    Quadrant membership comes from which side of each cut a piece lies on,
    never from comparing centroids, so boundary pieces cannot be
    misclassified. Internal fast path shared by split_at_axes and the
    metrics module.
    """
    xc = frame_w * 0.5
    yc = frame_h * 0.5
    out = []
    for idx, (x, y, w, h) in enumerate(rects):
        x2 = x + w
        y2 = y + h
        xcuts = []
        if x < xc:
            xcuts.append((x, min(x2, xc), 0))
        if x2 > xc:
            xcuts.append((max(x, xc), x2, 1))
        ycuts = []
        if y < yc:
            ycuts.append((y, min(y2, yc), 0))
        if y2 > yc:
            ycuts.append((max(y, yc), y2, 1))
        for (xa, xb, sx) in xcuts:
            pw = xb - xa
            if pw <= 0:
                continue
            for (ya, yb, sy) in ycuts:
                ph = yb - ya
                if ph <= 0:
                    continue
                out.append(
                    (
                        sx + 2 * sy,
                        pw * ph,
                        (xa + xb) * 0.5,
                        (ya + yb) * 0.5,
                        pw,
                        ph,
                        idx,
                    )
                )
    return out


def aggregate_rects(frame_w: float, frame_h: float, portions) -> tuple:
    """Sum the seven aggregate families over split tuples.

    Returns (X, Y, H, B, Theta, R, A), each a list of four floats in
    reading order.
    """
    xc = frame_w * 0.5
    yc = frame_h * 0.5
    xs = [0.0, 0.0, 0.0, 0.0]
    ys = [0.0, 0.0, 0.0, 0.0]
    hs = [0.0, 0.0, 0.0, 0.0]
    bs = [0.0, 0.0, 0.0, 0.0]
    ts = [0.0, 0.0, 0.0, 0.0]
    rs = [0.0, 0.0, 0.0, 0.0]
    as_ = [0.0, 0.0, 0.0, 0.0]
    for p in portions:
        qi = p[0]
        area = p[1]
        dx = abs(p[2] - xc)
        dy = abs(p[3] - yc)
        xs[qi] += dx
        ys[qi] += dy
        hs[qi] += p[5]
        bs[qi] += p[4]
        ts[qi] += dy / max(dx, THETA_EPS)
        rs[qi] += math.sqrt(dx * dx + dy * dy)
        as_[qi] += area
    return (xs, ys, hs, bs, ts, rs, as_)


def split_at_axes(layout: Layout) -> tuple[Portion, ...]:
    """Cut every object at the frame's center lines into 1-4 portions.

    Zero-area pieces are dropped; the kept portions of an object cover it
    exactly.
    """
    layout.require_objects()
    rects = [(o.x, o.y, o.w, o.h) for o in layout.objects]
    return tuple(
        Portion(
            quadrant=QUADRANTS[qi],
            area=area,
            cx=cx,
            cy=cy,
            pw=pw,
            ph=ph,
            owner=layout.objects[idx].id,
        )
        for (qi, area, cx, cy, pw, ph, idx) in split_rects(
            layout.frame.width, layout.frame.height, rects
        )
    )


def quadrant_aggregates(portions: Iterable[Portion], frame: Frame) -> QuadrantAggregates:
    """Aggregate portions into the per-quadrant sums the measures consume.

    Empty input yields all-zero aggregates.
    """
    tuples = [
        (p.quadrant.value, p.area, p.cx, p.cy, p.pw, p.ph, 0) for p in portions
    ]
    xs, ys, hs, bs, ts, rs, as_ = aggregate_rects(frame.width, frame.height, tuples)
    return QuadrantAggregates(
        x=tuple(xs),
        y=tuple(ys),
        h=tuple(hs),
        b=tuple(bs),
        theta=tuple(ts),
        r=tuple(rs),
        a=tuple(as_),
    )


def layout_from_rects(
    frame_w: float, frame_h: float, rects: Sequence[tuple], ids: Sequence[str] | None = None
) -> Layout:
    """Build a Layout from (x, y, w, h) tuples, generating ids when absent."""
    if ids is None:
        ids = [f"obj{i + 1}" for i in range(len(rects))]
    return Layout(
        frame=Frame(frame_w, frame_h),
        objects=tuple(
            LayoutObject(id=i, x=r[0], y=r[1], w=r[2], h=r[3]) for i, r in zip(ids, rects)
        ),
    )
