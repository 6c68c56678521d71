"""The five component measures and their aggregate aesthetic value.

All measures map a layout into [0, 1] (1 best). balance and equilibrium
weigh content against the frame's center lines and center of mass;
symmetry, sequence, and rhythm compare per-quadrant aggregate profiles;
the aggregate aesthetic value (av) is the plain mean of the five.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .model import Layout, aggregate_rects, split_rects

# Reading-order weights for the sequence measure: UL, UR, LL, LR.
READING_WEIGHTS = (4, 3, 2, 1)

_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class AxisWeights:
    """Total area-times-offset weight on each side of the center lines."""

    left: float
    right: float
    top: float
    bottom: float


@dataclass(frozen=True)
class MeasureVector:
    balance: float
    equilibrium: float
    symmetry: float
    sequence: float
    rhythm: float
    av: float

    def as_dict(self) -> dict[str, float]:
        return {
            "balance": self.balance,
            "equilibrium": self.equilibrium,
            "symmetry": self.symmetry,
            "sequence": self.sequence,
            "rhythm": self.rhythm,
            "av": self.av,
        }

    def components(self) -> tuple[float, float, float, float, float]:
        return (self.balance, self.equilibrium, self.symmetry, self.sequence, self.rhythm)


def _normalize(values) -> list[float]:
    m = max(values)
    if m <= 0.0:
        return [0.0, 0.0, 0.0, 0.0]
    return [v / m for v in values]


def axis_weights_for_rects(frame_w: float, frame_h: float, rects) -> AxisWeights:
    left = right = top = bottom = 0.0
    xc = frame_w * 0.5
    yc = frame_h * 0.5
    for p in split_rects(frame_w, frame_h, rects):
        qi = p[0]
        wgt_x = p[1] * abs(p[2] - xc)
        wgt_y = p[1] * abs(p[3] - yc)
        if qi & 1:
            right += wgt_x
        else:
            left += wgt_x
        if qi & 2:
            bottom += wgt_y
        else:
            top += wgt_y
    return AxisWeights(left=left, right=right, top=top, bottom=bottom)


def _side_component(a: float, b: float) -> float:
    if a == 0.0 and b == 0.0:
        return 0.0
    return (a - b) / max(abs(a), abs(b))


def measure_rects(frame_w: float, frame_h: float, rects) -> tuple:
    """Compute (balance, equilibrium, symmetry, sequence, rhythm) for raw
    (x, y, w, h) rects.

    Hot path for the optimizer: no Layout/Portion objects are built.
    """
    portions = split_rects(frame_w, frame_h, rects)
    xs, ys, hs, bs, ts, rs, as_ = aggregate_rects(frame_w, frame_h, portions)
    xc = frame_w * 0.5
    yc = frame_h * 0.5

    # balance: area-weighted offsets of split portions per side
    w_left = w_right = w_top = w_bottom = 0.0
    for p in portions:
        qi = p[0]
        wgt_x = p[1] * abs(p[2] - xc)
        wgt_y = p[1] * abs(p[3] - yc)
        if qi & 1:
            w_right += wgt_x
        else:
            w_left += wgt_x
        if qi & 2:
            w_bottom += wgt_y
        else:
            w_top += wgt_y
    bal = 1.0 - (abs(_side_component(w_left, w_right)) + abs(_side_component(w_top, w_bottom))) / 2.0

    # equilibrium: whole-object centers, not portions
    total_area = 0.0
    moment_x = 0.0
    moment_y = 0.0
    for (x, y, w, h) in rects:
        a = w * h
        total_area += a
        moment_x += a * (x + w * 0.5 - xc)
        moment_y += a * (y + h * 0.5 - yc)
    em_x = 2.0 * moment_x / (frame_w * total_area)
    em_y = 2.0 * moment_y / (frame_h * total_area)
    equ = 1.0 - (abs(em_x) + abs(em_y)) / 2.0

    # symmetry: six families, three pairings, twelve terms per pairing
    sym_ver = sym_hor = sym_rad = 0.0
    for fam in (xs, ys, hs, bs, ts, rs):
        n = _normalize(fam)
        sym_ver += abs(n[0] - n[1]) + abs(n[2] - n[3])
        sym_hor += abs(n[0] - n[2]) + abs(n[1] - n[3])
        sym_rad += abs(n[0] - n[3]) + abs(n[1] - n[2])
    sym = 1.0 - (sym_ver / 12.0 + sym_hor / 12.0 + sym_rad / 12.0) / 3.0

    seq = 1.0 - _sequence_deviation(as_) / 8.0

    # rhythm: X, Y, A families over all six quadrant pairs
    acc = 0.0
    for fam in (xs, ys, as_):
        n = _normalize(fam)
        acc += sum(abs(n[i] - n[j]) for i, j in _PAIRS) / 6.0
    rhy = 1.0 - acc / 3.0

    return (bal, equ, sym, seq, rhy)


@dataclass(frozen=True)
class SequenceAssignment:
    """Reading-order weights and rank values behind the sequence measure.

    All tuples run UL, UR, LL, LR: u are the fixed reading-order weights,
    w = u * A the area weights, q the reading-order values (equal to u),
    and v the rank values assigned from the w ordering.
    """

    u: tuple[int, int, int, int]
    w: tuple[float, float, float, float]
    q: tuple[int, int, int, int]
    v: tuple[int, int, int, int]

    def deviation(self) -> int:
        return sum(abs(qj - vj) for qj, vj in zip(self.q, self.v))


def _sequence_ranks(w) -> list[int]:
    """Rank values from area weights: sort w descending (reading order on
    ties); a tie group takes the largest rank value among its positions,
    which is what makes odd deviation sums reachable.
    """
    order = sorted(range(4), key=lambda i: (-w[i], i))
    v = [0, 0, 0, 0]
    pos = 0
    while pos < 4:
        end = pos
        while end + 1 < 4 and w[order[end + 1]] == w[order[pos]]:
            end += 1
        for k in range(pos, end + 1):
            v[order[k]] = 4 - pos
        pos = end + 1
    return v


def sequence_assignment(areas) -> SequenceAssignment:
    """Expose the sequence measure's intermediate weights and ranks for the
    four quadrant areas (reading order)."""
    w = tuple(READING_WEIGHTS[i] * areas[i] for i in range(4))
    return SequenceAssignment(
        u=READING_WEIGHTS, w=w, q=READING_WEIGHTS, v=tuple(_sequence_ranks(w))
    )


def _sequence_deviation(areas) -> int:
    w = [READING_WEIGHTS[i] * areas[i] for i in range(4)]
    v = _sequence_ranks(w)
    return sum(abs(READING_WEIGHTS[i] - v[i]) for i in range(4))


def _rects_of(layout: Layout) -> list:
    layout.require_objects()
    return [(o.x, o.y, o.w, o.h) for o in layout.objects]


def balance(layout: Layout) -> float:
    return measure_rects(layout.frame.width, layout.frame.height, _rects_of(layout))[0]


def equilibrium(layout: Layout) -> float:
    return measure_rects(layout.frame.width, layout.frame.height, _rects_of(layout))[1]


def symmetry(layout: Layout) -> float:
    return measure_rects(layout.frame.width, layout.frame.height, _rects_of(layout))[2]


def sequence(layout: Layout) -> float:
    return measure_rects(layout.frame.width, layout.frame.height, _rects_of(layout))[3]


def rhythm(layout: Layout) -> float:
    return measure_rects(layout.frame.width, layout.frame.height, _rects_of(layout))[4]


def order_complexity(
    balance: float, equilibrium: float, symmetry: float, sequence: float, rhythm: float
) -> float:
    """Mean of the five component measures: the aggregate aesthetic value."""
    for name, value in (
        ("balance", balance),
        ("equilibrium", equilibrium),
        ("symmetry", symmetry),
        ("sequence", sequence),
        ("rhythm", rhythm),
    ):
        if not (0.0 <= value <= 1.0):
            raise DomainError(f"{name} must lie in [0, 1], got {value}")
    return (balance + equilibrium + symmetry + sequence + rhythm) / 5.0


def evaluate(layout: Layout) -> MeasureVector:
    """All five measures plus their aggregate for a non-empty layout."""
    b, e, s, q, r = measure_rects(
        layout.frame.width, layout.frame.height, _rects_of(layout)
    )
    return MeasureVector(
        balance=b,
        equilibrium=e,
        symmetry=s,
        sequence=q,
        rhythm=r,
        av=(b + e + s + q + r) / 5.0,
    )
