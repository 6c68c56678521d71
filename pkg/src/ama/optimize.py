"""Layout search: simulated annealing over object positions.

Object sizes never change; each step nudges one object, clamps it to the
frame, and accepts by the usual Metropolis rule on the objective score.
Runs are fully deterministic for a fixed seed (Mersenne Twister via
random.Random, recorded as "mt19937" in results).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from typing import Sequence

from .errors import DomainError, EmptyLayoutError
from .metrics import measure_rects
from .model import Frame, Layout, LayoutObject

RNG_ID = "mt19937"

# One proposal in ten keeps the full move span so exploration never dies
# while the regular span anneals down for precise placement.
FULL_MOVE_PROB = 0.1

MODE_MAXIMIZE = "maximize"
MODE_MATCH_TARGET = "match_target"


@dataclass(frozen=True)
class ObjectiveSpec:
    """What the search optimizes.

    maximize: weighted sum of the five component measures (weights
    non-negative, sum > 0). match_target: negative L1 distance to either a
    five-component target tuple or a single av target, so larger is always
    better.
    """

    mode: str
    weights: tuple[float, float, float, float, float] | None = None
    target: float | tuple[float, ...] | None = None

    def __post_init__(self):
        if self.mode not in (MODE_MAXIMIZE, MODE_MATCH_TARGET):
            raise DomainError(f"unknown objective mode {self.mode!r}")
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if isinstance(self.target, (list, tuple)):
            object.__setattr__(self, "target", tuple(float(t) for t in self.target))
        elif self.target is not None:
            object.__setattr__(self, "target", float(self.target))
        if self.mode == MODE_MAXIMIZE:
            if self.target is not None:
                raise DomainError("maximize mode takes weights, not a target")
            if self.weights is None or len(self.weights) != 5:
                raise DomainError("maximize mode needs five weights")
            if any(w < 0 for w in self.weights):
                raise DomainError("weights must be non-negative")
            if sum(self.weights) <= 0:
                raise DomainError("weights must not all be zero")
        else:
            if self.weights is not None:
                raise DomainError("match_target mode takes a target, not weights")
            if self.target is None:
                raise DomainError("match_target mode needs a target")
            values = self.target if isinstance(self.target, tuple) else (self.target,)
            if isinstance(self.target, tuple) and len(self.target) != 5:
                raise DomainError("a target tuple must have five components")
            if any(not (0.0 <= t <= 1.0) for t in values):
                raise DomainError("targets must lie in [0, 1]")


@dataclass(frozen=True)
class SearchParams:
    seed: int = 0
    iterations: int = 20_000
    initial_temperature: float = 0.1
    cooling: float = 0.9995
    move_scale: float = 0.1
    forbid_overlap: bool = False

    def __post_init__(self):
        if self.iterations < 0:
            raise DomainError("iterations must be >= 0")
        if not (self.initial_temperature > 0):
            raise DomainError("initial_temperature must be positive")
        if not (0.0 < self.cooling < 1.0):
            raise DomainError("cooling must lie in (0, 1)")
        if not (self.move_scale > 0):
            raise DomainError("move_scale must be positive")


@dataclass(frozen=True)
class OptimizationResult:
    best_layout: Layout
    best_score: float
    trace: tuple[tuple[int, float], ...]
    evaluations: int
    rng: str = RNG_ID


def _score_measures(measures: tuple, objective: ObjectiveSpec) -> float:
    if objective.mode == MODE_MAXIMIZE:
        w = objective.weights
        return (
            w[0] * measures[0]
            + w[1] * measures[1]
            + w[2] * measures[2]
            + w[3] * measures[3]
            + w[4] * measures[4]
        )
    target = objective.target
    if isinstance(target, tuple):
        return -sum(abs(m - t) for m, t in zip(measures, target))
    av = (measures[0] + measures[1] + measures[2] + measures[3] + measures[4]) / 5.0
    return -abs(av - target)


def score(layout: Layout, objective: ObjectiveSpec) -> float:
    """Objective score of a layout; higher is better in both modes."""
    layout.require_objects()
    measures = measure_rects(
        layout.frame.width, layout.frame.height, [(o.x, o.y, o.w, o.h) for o in layout.objects]
    )
    return _score_measures(measures, objective)


def _overlaps(rects: Sequence[list], idx: int, x: float, y: float) -> bool:
    w = rects[idx][2]
    h = rects[idx][3]
    for j, r in enumerate(rects):
        if j == idx:
            continue
        if x < r[0] + r[2] and x + w > r[0] and y < r[1] + r[3] and y + h > r[1]:
            return True
    return False


def optimize(layout: Layout, objective: ObjectiveSpec, params: SearchParams) -> OptimizationResult:
    """Anneal object positions against the objective.

    Per iteration: pick one object uniformly, translate it by a uniform
    draw within the current move span per axis, clamp inside the frame;
    with forbid_overlap a move that intersects another object is rejected
    outright. Accept improvements always and regressions with probability
    exp(delta/T). The temperature and the move span (which starts at
    move_scale of each frame dimension) both cool multiplicatively every
    iteration, so late moves refine instead of teleporting; without the
    shrinking span the endgame cannot place objects precisely enough to
    max out the score.
    """
    layout.require_objects()
    fw = layout.frame.width
    fh = layout.frame.height
    rects = [[o.x, o.y, o.w, o.h] for o in layout.objects]
    n = len(rects)

    rng = random.Random(params.seed)
    current = _score_measures(measure_rects(fw, fh, rects), objective)
    evaluations = 1
    best = current
    best_positions = [(r[0], r[1]) for r in rects]
    trace = [(0, best)]

    temperature = params.initial_temperature
    full_span_x = params.move_scale * fw
    full_span_y = params.move_scale * fh
    span_x = full_span_x
    span_y = full_span_y
    span_decay = params.cooling * params.cooling

    for it in range(1, params.iterations + 1):
        idx = rng.randrange(n)
        r = rects[idx]
        old_x = r[0]
        old_y = r[1]
        if rng.random() < FULL_MOVE_PROB:
            x = old_x + rng.uniform(-full_span_x, full_span_x)
            y = old_y + rng.uniform(-full_span_y, full_span_y)
        else:
            x = old_x + rng.uniform(-span_x, span_x)
            y = old_y + rng.uniform(-span_y, span_y)
        # clamp fully inside the frame
        max_x = fw - r[2]
        max_y = fh - r[3]
        x = 0.0 if x < 0.0 else (max_x if x > max_x else x)
        y = 0.0 if y < 0.0 else (max_y if y > max_y else y)

        if params.forbid_overlap and _overlaps(rects, idx, x, y):
            temperature *= params.cooling
            span_x *= span_decay
            span_y *= span_decay
            continue

        r[0] = x
        r[1] = y
        candidate = _score_measures(measure_rects(fw, fh, rects), objective)
        evaluations += 1
        delta = candidate - current
        if delta >= 0 or (
            temperature > 0.0 and rng.random() < math.exp(delta / temperature)
        ):
            current = candidate
            if candidate > best:
                best = candidate
                best_positions = [(q[0], q[1]) for q in rects]
                trace.append((it, best))
        else:
            r[0] = old_x
            r[1] = old_y
        temperature *= params.cooling
        span_x *= span_decay
        span_y *= span_decay

    objects = tuple(
        LayoutObject(id=o.id, x=px, y=py, w=o.w, h=o.h)
        for o, (px, py) in zip(layout.objects, best_positions)
    )
    return OptimizationResult(
        best_layout=Layout(frame=Frame(fw, fh), objects=objects),
        best_score=best,
        trace=tuple(trace),
        evaluations=evaluations,
    )


def generate_groups(
    base: Layout, targets: Sequence[float], params: SearchParams
) -> list[Layout]:
    """One annealing run per av target, seeds offset by target index.

    Targets are expected in descending order; the returned layouts aim to
    track that ordering.
    """
    layouts = []
    for i, target in enumerate(targets):
        objective = ObjectiveSpec(mode=MODE_MATCH_TARGET, target=float(target))
        result = optimize(base, objective, replace(params, seed=params.seed + i))
        layouts.append(result.best_layout)
    return layouts
