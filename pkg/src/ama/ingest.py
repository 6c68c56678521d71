"""Layout file I/O: JSON documents, Netpbm object-model images, results tables.

The JSON layout document is the ground-truth interchange format:

    {"schema_version": 1,
     "frame": {"width": W, "height": H},
     "objects": [{"id": "s", "x": N, "y": N, "w": N, "h": N}, ...]}

Object-model bitmaps arrive as Netpbm P1/P2 (ASCII) or P5 (binary) files;
extraction thresholds the image, labels 4-connected foreground components,
and keeps each component's bounding box as one rectangle.
"""

from __future__ import annotations

import io
import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DecodeError, EmptyLayoutError, ParseError, ValidationError
from .metrics import MeasureVector
from .model import Frame, Layout, LayoutObject

SCHEMA_VERSION = 1

_DOCUMENT_KEYS = {"schema_version", "frame", "objects"}
_FRAME_KEYS = {"width", "height"}
_OBJECT_KEYS = {"id", "x", "y", "w", "h"}


def _require_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where} must be a number, got {value!r}")
    return float(value)


def parse_layout(text: str, strict: bool = False) -> Layout:
    """Parse a JSON layout document into a validated Layout.

    strict rejects unknown fields; the default ignores them.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return layout_from_document(doc, strict=strict)


def layout_from_document(doc, strict: bool = False) -> Layout:
    if not isinstance(doc, dict):
        raise ParseError("layout document must be a JSON object")
    if strict:
        unknown = set(doc) - _DOCUMENT_KEYS
        if unknown:
            raise ParseError(f"unknown document fields: {sorted(unknown)}")
    if "frame" not in doc or "objects" not in doc:
        raise ParseError("layout document needs 'frame' and 'objects'")
    frame_doc = doc["frame"]
    if not isinstance(frame_doc, dict) or not _FRAME_KEYS <= set(frame_doc):
        raise ParseError("frame needs numeric 'width' and 'height'")
    if strict and set(frame_doc) - _FRAME_KEYS:
        raise ParseError(f"unknown frame fields: {sorted(set(frame_doc) - _FRAME_KEYS)}")
    frame = Frame(
        width=_require_number(frame_doc["width"], "frame.width"),
        height=_require_number(frame_doc["height"], "frame.height"),
    )
    objects_doc = doc["objects"]
    if not isinstance(objects_doc, list):
        raise ParseError("'objects' must be a list")
    objects = []
    for i, entry in enumerate(objects_doc):
        if not isinstance(entry, dict):
            raise ParseError(f"objects[{i}] must be an object")
        missing = _OBJECT_KEYS - set(entry)
        if missing:
            raise ParseError(f"objects[{i}] is missing fields: {sorted(missing)}")
        if strict and set(entry) - _OBJECT_KEYS:
            raise ParseError(
                f"objects[{i}] has unknown fields: {sorted(set(entry) - _OBJECT_KEYS)}"
            )
        oid = entry["id"]
        if not isinstance(oid, str) or not oid:
            raise ParseError(f"objects[{i}].id must be a non-empty string")
        objects.append(
            LayoutObject(
                id=oid,
                x=_require_number(entry["x"], f"objects[{i}].x"),
                y=_require_number(entry["y"], f"objects[{i}].y"),
                w=_require_number(entry["w"], f"objects[{i}].w"),
                h=_require_number(entry["h"], f"objects[{i}].h"),
            )
        )
    return Layout(frame=frame, objects=tuple(objects))


def _plain(value: float):
    # keep integral coordinates as ints so documents round-trip tidily
    return int(value) if float(value).is_integer() else value


def layout_to_document(layout: Layout) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "frame": {"width": _plain(layout.frame.width), "height": _plain(layout.frame.height)},
        "objects": [
            {
                "id": o.id,
                "x": _plain(o.x),
                "y": _plain(o.y),
                "w": _plain(o.w),
                "h": _plain(o.h),
            }
            for o in layout.objects
        ],
    }


def serialize_layout(layout: Layout, indent: int | None = 2) -> str:
    return json.dumps(layout_to_document(layout), indent=indent)


# --- Netpbm object-model images ---------------------------------------------


@dataclass(frozen=True)
class RasterImage:
    """Single-channel intensity grid, row-major, 0..maxval."""

    width: int
    height: int
    maxval: int
    samples: tuple[int, ...]

    def sample(self, x: int, y: int) -> int:
        return self.samples[y * self.width + x]


def _header_tokens(data: bytes):
    """Yield whitespace-separated header tokens, skipping # comments."""
    pos = 0
    n = len(data)
    while pos < n:
        c = data[pos : pos + 1]
        if c.isspace():
            pos += 1
        elif c == b"#":
            while pos < n and data[pos : pos + 1] not in (b"\n", b"\r"):
                pos += 1
        else:
            start = pos
            while pos < n and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"#":
                pos += 1
            yield data[start:pos].decode("ascii", "replace"), pos
    return


def read_netpbm(data: bytes) -> RasterImage:
    """Decode a P1, P2, or P5 Netpbm image, honoring maxval and comments."""
    tokens = _header_tokens(data)

    def next_token(what: str) -> tuple[str, int]:
        try:
            return next(tokens)
        except StopIteration:
            raise DecodeError(f"truncated image header: missing {what}") from None

    magic, _ = next_token("magic number")
    if magic not in ("P1", "P2", "P5"):
        raise DecodeError(f"unsupported image magic {magic!r} (want P1, P2, or P5)")

    def next_int(what: str) -> tuple[int, int]:
        tok, end = next_token(what)
        try:
            value = int(tok)
        except ValueError:
            raise DecodeError(f"bad {what}: {tok!r}") from None
        return value, end

    width, end = next_int("width")
    height, end = next_int("height")
    if width <= 0 or height <= 0:
        raise DecodeError(f"bad image dimensions {width}x{height}")
    count = width * height

    if magic == "P1":
        samples = []
        text = data[end:]
        i = 0
        n = len(text)
        while i < n and len(samples) < count:
            c = text[i : i + 1]
            if c == b"#":
                while i < n and text[i : i + 1] not in (b"\n", b"\r"):
                    i += 1
            elif c in (b"0", b"1"):
                # PBM: 1 is ink (black); store as intensity so dark = 0
                samples.append(0 if c == b"1" else 1)
                i += 1
            elif c.isspace():
                i += 1
            else:
                raise DecodeError(f"unexpected character {c!r} in bitmap data")
        if len(samples) != count:
            raise DecodeError(f"bitmap data ended early: {len(samples)}/{count} samples")
        return RasterImage(width=width, height=height, maxval=1, samples=tuple(samples))

    maxval, end = next_int("maxval")
    if not (1 <= maxval <= 65535):
        raise DecodeError(f"maxval {maxval} out of range [1, 65535]")

    if magic == "P2":
        samples = []
        for tok, _pos in tokens:
            try:
                value = int(tok)
            except ValueError:
                raise DecodeError(f"bad sample {tok!r}") from None
            if not (0 <= value <= maxval):
                raise DecodeError(f"sample {value} exceeds maxval {maxval}")
            samples.append(value)
            if len(samples) == count:
                break
        if len(samples) != count:
            raise DecodeError(f"pixel data ended early: {len(samples)}/{count} samples")
        return RasterImage(width=width, height=height, maxval=maxval, samples=tuple(samples))

    # P5: exactly one whitespace byte after maxval, then binary samples
    raster = data[end + 1 :]
    per_sample = 1 if maxval < 256 else 2
    need = count * per_sample
    if len(raster) < need:
        raise DecodeError(f"binary data ended early: {len(raster)}/{need} bytes")
    if per_sample == 1:
        samples = tuple(raster[:need])
    else:
        samples = tuple(
            (raster[i] << 8) | raster[i + 1] for i in range(0, need, 2)
        )
    for v in samples:
        if v > maxval:
            raise DecodeError(f"sample {v} exceeds maxval {maxval}")
    return RasterImage(width=width, height=height, maxval=maxval, samples=samples)


def load_netpbm(path) -> RasterImage:
    with open(path, "rb") as f:
        return read_netpbm(f.read())


def ingest_object_model(
    image: RasterImage,
    threshold: float | None = None,
    invert: bool = False,
    min_area: float = 4.0,
) -> Layout:
    """Extract a layout from a bilevel object-model image.

    Foreground pixels are samples below the threshold (above it with
    invert); default threshold is maxval/2, so dark marks on a light
    background are foreground. Each 4-connected component of at least
    min_area pixels becomes one object covering its bounding box, ids
    assigned obj1, obj2, ... in raster-scan discovery order.
    """
    thr = image.maxval / 2.0 if threshold is None else float(threshold)
    w = image.width
    h = image.height
    samples = image.samples
    if invert:
        fg = bytearray(1 if s > thr else 0 for s in samples)
    else:
        fg = bytearray(1 if s < thr else 0 for s in samples)

    boxes = []
    queue = deque()
    for start in range(w * h):
        if not fg[start]:
            continue
        fg[start] = 0
        queue.append(start)
        minx = maxx = start % w
        miny = maxy = start // w
        pixels = 0
        while queue:
            pos = queue.popleft()
            pixels += 1
            px = pos % w
            py = pos // w
            if px < minx:
                minx = px
            elif px > maxx:
                maxx = px
            if py < miny:
                miny = py
            elif py > maxy:
                maxy = py
            if px > 0 and fg[pos - 1]:
                fg[pos - 1] = 0
                queue.append(pos - 1)
            if px + 1 < w and fg[pos + 1]:
                fg[pos + 1] = 0
                queue.append(pos + 1)
            if py > 0 and fg[pos - w]:
                fg[pos - w] = 0
                queue.append(pos - w)
            if py + 1 < h and fg[pos + w]:
                fg[pos + w] = 0
                queue.append(pos + w)
        if pixels >= min_area:
            boxes.append((minx, miny, maxx - minx + 1, maxy - miny + 1))

    if not boxes:
        raise EmptyLayoutError("no components at or above the minimum area")
    return Layout(
        frame=Frame(width=float(w), height=float(h)),
        objects=tuple(
            LayoutObject(id=f"obj{i + 1}", x=float(bx), y=float(by), w=float(bw), h=float(bh))
            for i, (bx, by, bw, bh) in enumerate(boxes)
        ),
    )


# --- Results tables ----------------------------------------------------------

RESULT_COLUMNS = ("label", "balance", "equilibrium", "symmetry", "sequence", "rhythm", "av")


def export_results(rows: Iterable[tuple[str, MeasureVector]], format: str = "csv") -> str:
    """Serialize (label, MeasureVector) rows.

    CSV prints 4 decimal places; JSON keeps full precision.
    """
    rows = list(rows)
    if format == "csv":
        out = io.StringIO()
        out.write(",".join(RESULT_COLUMNS) + "\n")
        for label, mv in rows:
            out.write(
                f"{label},{mv.balance:.4f},{mv.equilibrium:.4f},{mv.symmetry:.4f},"
                f"{mv.sequence:.4f},{mv.rhythm:.4f},{mv.av:.4f}\n"
            )
        return out.getvalue()
    if format == "json":
        return json.dumps(
            [{"label": label, **mv.as_dict()} for label, mv in rows], indent=2
        )
    raise ValueError(f"unknown results format {format!r}")


def parse_results_json(text: str) -> list[tuple[str, MeasureVector]]:
    data = json.loads(text)
    rows = []
    for entry in data:
        rows.append(
            (
                entry["label"],
                MeasureVector(
                    balance=entry["balance"],
                    equilibrium=entry["equilibrium"],
                    symmetry=entry["symmetry"],
                    sequence=entry["sequence"],
                    rhythm=entry["rhythm"],
                    av=entry["av"],
                ),
            )
        )
    return rows
