"""Shared layout generators for property and randomized tests."""

import math

from hypothesis import strategies as st

from ama import Frame, Layout, LayoutObject


def make_layout(frame_w, frame_h, rects):
    return Layout(
        frame=Frame(frame_w, frame_h),
        objects=tuple(
            LayoutObject(id=f"o{i}", x=r[0], y=r[1], w=r[2], h=r[3])
            for i, r in enumerate(rects)
        ),
    )


def random_layout(rng, max_objects=12, frame_range=(60.0, 800.0)):
    """Plain-random valid layout with float coordinates."""
    fw = rng.uniform(*frame_range)
    fh = rng.uniform(*frame_range)
    n = rng.randint(1, max_objects)
    rects = []
    for _ in range(n):
        w = rng.uniform(1.0, fw)
        h = rng.uniform(1.0, fh)
        x = _fit(rng.uniform(0.0, fw - w), w, fw)
        y = _fit(rng.uniform(0.0, fh - h), h, fh)
        rects.append((x, y, w, h))
    return make_layout(fw, fh, rects)


@st.composite
def grid_layouts(draw, max_objects=8, step=0.25, max_units=800):
    """Layouts on a quarter-pixel grid: splitting and mirroring arithmetic
    stays exact in binary floating point."""
    uw = draw(st.integers(min_value=80, max_value=max_units))
    uh = draw(st.integers(min_value=80, max_value=max_units))
    n = draw(st.integers(min_value=1, max_value=max_objects))
    rects = []
    for _ in range(n):
        w = draw(st.integers(min_value=1, max_value=uw))
        h = draw(st.integers(min_value=1, max_value=uh))
        x = draw(st.integers(min_value=0, max_value=uw - w))
        y = draw(st.integers(min_value=0, max_value=uh - h))
        rects.append((x * step, y * step, w * step, h * step))
    return make_layout(uw * step, uh * step, rects)


def _fit(offset, extent, limit):
    # nudge down until offset + extent stays inside the frame despite rounding
    while offset > 0.0 and offset + extent > limit:
        offset = math.nextafter(offset, 0.0)
    return offset


@st.composite
def float_layouts(draw, max_objects=8):
    """Layouts with arbitrary float coordinates inside the frame."""
    fw = draw(st.floats(min_value=50.0, max_value=1000.0, allow_nan=False))
    fh = draw(st.floats(min_value=50.0, max_value=1000.0, allow_nan=False))
    n = draw(st.integers(min_value=1, max_value=max_objects))
    rects = []
    for _ in range(n):
        w = draw(st.floats(min_value=0.5, max_value=fw, allow_nan=False))
        h = draw(st.floats(min_value=0.5, max_value=fh, allow_nan=False))
        fx = draw(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
        fy = draw(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
        x = _fit(fx * (fw - w), w, fw)
        y = _fit(fy * (fh - h), h, fh)
        rects.append((x, y, w, h))
    return make_layout(fw, fh, rects)


def mirror_horizontal(layout):
    """Flip across the vertical center line (ulp-clamped into the frame)."""
    fw = layout.frame.width
    return Layout(
        frame=layout.frame,
        objects=tuple(
            LayoutObject(id=o.id, x=_fit(max(fw - o.x - o.w, 0.0), o.w, fw), y=o.y, w=o.w, h=o.h)
            for o in layout.objects
        ),
    )


def mirror_vertical(layout):
    """Flip across the horizontal center line (ulp-clamped into the frame)."""
    fh = layout.frame.height
    return Layout(
        frame=layout.frame,
        objects=tuple(
            LayoutObject(id=o.id, x=o.x, y=_fit(max(fh - o.y - o.h, 0.0), o.h, fh), w=o.w, h=o.h)
            for o in layout.objects
        ),
    )


def scale_layout(layout, s):
    return Layout(
        frame=Frame(layout.frame.width * s, layout.frame.height * s),
        objects=tuple(
            LayoutObject(id=o.id, x=o.x * s, y=o.y * s, w=o.w * s, h=o.h * s)
            for o in layout.objects
        ),
    )
