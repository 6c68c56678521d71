"""Ranking and significance machinery: competition ranks, Spearman rho,
one-way ANOVA with a self-contained F-distribution tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateInputError, EmptyInputError, LabelMismatchError


@dataclass(frozen=True)
class RankVector:
    """Labels with competition ranks (1 = best; ties share the best position)."""

    entries: tuple[tuple[str, int], ...]

    def rank_of(self, label: str) -> int:
        for lbl, rank in self.entries:
            if lbl == label:
                return rank
        raise KeyError(label)

    def labels(self) -> frozenset[str]:
        return frozenset(lbl for lbl, _ in self.entries)

    def has_ties(self) -> bool:
        ranks = [rank for _, rank in self.entries]
        return len(set(ranks)) != len(ranks)


@dataclass(frozen=True)
class AnovaResult:
    df_between: int
    df_within: int
    f_value: float
    p_value: float


def rank_by_value(items: Iterable[tuple[str, float]], descending: bool = True) -> RankVector:
    """Competition-rank labeled values; rank = 1 + count of strictly better."""
    items = list(items)
    if not items:
        raise EmptyInputError("nothing to rank")
    ranked = []
    for label, value in items:
        if descending:
            better = sum(1 for _, v in items if v > value)
        else:
            better = sum(1 for _, v in items if v < value)
        ranked.append((label, better + 1))
    ranked.sort(key=lambda lv: (lv[1], lv[0]))
    return RankVector(entries=tuple(ranked))


def spearman_rho(a: RankVector, b: RankVector) -> float:
    """Spearman correlation of two rankings over the same labels.

    Tie-free rankings use the closed form 1 - 6*sum(d^2)/(n(n^2-1));
    rankings with ties fall back to Pearson on the rank values.
    """
    if a.labels() != b.labels():
        raise LabelMismatchError("rankings cover different label sets")
    labels = sorted(a.labels())
    n = len(labels)
    if n == 1:
        return 1.0
    ra = [a.rank_of(lbl) for lbl in labels]
    rb = [b.rank_of(lbl) for lbl in labels]
    if not a.has_ties() and not b.has_ties():
        d2 = sum((x - y) ** 2 for x, y in zip(ra, rb))
        return 1.0 - 6.0 * d2 / (n * (n * n - 1))
    mean_a = sum(ra) / n
    mean_b = sum(rb) / n
    cov = sum((x - mean_a) * (y - mean_b) for x, y in zip(ra, rb))
    var_a = sum((x - mean_a) ** 2 for x in ra)
    var_b = sum((y - mean_b) ** 2 for y in rb)
    if var_a == 0.0 or var_b == 0.0:
        return 1.0 if ra == rb else 0.0
    return cov / math.sqrt(var_a * var_b)


def one_way_anova(groups: Sequence[Sequence[float]]) -> AnovaResult:
    """Classic one-way fixed-effects ANOVA.

    F = MS_between / MS_within; the p-value is the upper tail of the
    F(df_between, df_within) distribution. Zero within-group variance with
    separated means reports F = +inf, p = 0; no variance anywhere reports
    F = 0, p = 1.
    """
    if len(groups) < 2:
        raise DegenerateInputError("need at least two groups")
    for i, g in enumerate(groups):
        if len(g) < 2:
            raise DegenerateInputError(f"group {i} needs at least two observations")
    k = len(groups)
    total_n = sum(len(g) for g in groups)
    means = [math.fsum(g) / len(g) for g in groups]
    grand = math.fsum(math.fsum(g) for g in groups) / total_n
    ss_between = math.fsum(len(g) * (m - grand) ** 2 for g, m in zip(groups, means))
    ss_within = math.fsum(
        math.fsum((x - m) ** 2 for x in g) for g, m in zip(groups, means)
    )
    df_between = k - 1
    df_within = total_n - k
    ms_between = ss_between / df_between
    ms_within = ss_within / df_within
    if ms_within == 0.0:
        if ms_between > 0.0:
            return AnovaResult(df_between, df_within, math.inf, 0.0)
        return AnovaResult(df_between, df_within, 0.0, 1.0)
    f_value = ms_between / ms_within
    p_value = f_upper_tail(f_value, df_between, df_within)
    return AnovaResult(df_between, df_within, f_value, p_value)


def f_upper_tail(f: float, df1: int, df2: int) -> float:
    """P(F(df1, df2) > f) via the regularized incomplete beta function."""
    if f <= 0.0:
        return 1.0
    if math.isinf(f):
        return 0.0
    x = df2 / (df2 + df1 * f)
    return regularized_incomplete_beta(df2 / 2.0, df1 / 2.0, x)


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) by the standard continued-fraction expansion.

    Converges for all a, b > 0 using the symmetry transform at
    x = (a+1)/(a+b+2); absolute error well below 1e-10.
    """
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cf(a, b, x) / a
    return 1.0 - front * _beta_cf(b, a, 1.0 - x) / b


def _beta_cf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    max_iter = 300
    eps = 1e-15
    tiny = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        step = d * c
        h *= step
        if abs(step - 1.0) < eps:
            return h
    raise ArithmeticError(f"incomplete beta failed to converge for a={a}, b={b}, x={x}")
