import random

import pytest

from ama import (
    DomainError,
    EmptyLayoutError,
    Frame,
    Layout,
    ObjectiveSpec,
    SearchParams,
    evaluate,
    generate_groups,
    optimize,
    score,
)
from helpers import make_layout, random_layout
from reference_data import GOLDEN_TWO_OBJECT

CENTERED = make_layout(100, 100, [(25, 25, 50, 50)])
GOLDEN = make_layout(100, 100, [(10, 10, 20, 20), (60, 55, 30, 30)])

MAXIMIZE_ALL = ObjectiveSpec(mode="maximize", weights=(1, 1, 1, 1, 1))


class TestObjectiveSpec:
    def test_maximize_requires_weights(self):
        with pytest.raises(DomainError):
            ObjectiveSpec(mode="maximize")

    def test_maximize_rejects_negative_weights(self):
        with pytest.raises(DomainError):
            ObjectiveSpec(mode="maximize", weights=(1, -1, 0, 0, 0))

    def test_maximize_rejects_all_zero_weights(self):
        with pytest.raises(DomainError):
            ObjectiveSpec(mode="maximize", weights=(0, 0, 0, 0, 0))

    def test_match_target_requires_target(self):
        with pytest.raises(DomainError):
            ObjectiveSpec(mode="match_target")

    def test_target_out_of_range(self):
        with pytest.raises(DomainError):
            ObjectiveSpec(mode="match_target", target=1.5)

    def test_target_tuple_must_have_five(self):
        with pytest.raises(DomainError):
            ObjectiveSpec(mode="match_target", target=(0.5, 0.5))

    def test_unknown_mode(self):
        with pytest.raises(DomainError):
            ObjectiveSpec(mode="descend")


class TestSearchParams:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"iterations": -1},
            {"initial_temperature": 0.0},
            {"cooling": 1.0},
            {"cooling": 0.0},
            {"move_scale": 0.0},
        ],
    )
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(DomainError):
            SearchParams(**kwargs)


class TestScore:
    def test_maximize_all_ones_on_centered(self):
        assert score(CENTERED, MAXIMIZE_ALL) == pytest.approx(5.0)

    def test_match_target_own_measures_is_zero(self):
        mv = evaluate(GOLDEN)
        objective = ObjectiveSpec(mode="match_target", target=mv.components())
        assert score(GOLDEN, objective) == pytest.approx(0.0, abs=1e-12)

    def test_match_target_av_own_value_is_zero(self):
        objective = ObjectiveSpec(mode="match_target", target=evaluate(GOLDEN).av)
        assert score(GOLDEN, objective) == pytest.approx(0.0, abs=1e-12)

    def test_single_weight_picks_one_measure(self):
        objective = ObjectiveSpec(mode="maximize", weights=(1, 0, 0, 0, 0))
        assert score(GOLDEN, objective) == pytest.approx(
            GOLDEN_TWO_OBJECT["balance"], abs=1e-9
        )

    def test_empty_layout(self):
        with pytest.raises(EmptyLayoutError):
            score(Layout(frame=Frame(10, 10), objects=()), MAXIMIZE_ALL)


class TestOptimize:
    def test_zero_iterations_echoes_input(self):
        result = optimize(GOLDEN, MAXIMIZE_ALL, SearchParams(iterations=0))
        assert result.best_layout == GOLDEN
        assert result.best_score == score(GOLDEN, MAXIMIZE_ALL)
        assert result.trace == ((0, result.best_score),)
        assert result.evaluations == 1

    def test_deterministic_for_fixed_seed(self):
        params = SearchParams(seed=7, iterations=2000)
        a = optimize(GOLDEN, MAXIMIZE_ALL, params)
        b = optimize(GOLDEN, MAXIMIZE_ALL, params)
        assert a == b

    def test_different_seeds_diverge(self):
        a = optimize(GOLDEN, MAXIMIZE_ALL, SearchParams(seed=1, iterations=2000))
        b = optimize(GOLDEN, MAXIMIZE_ALL, SearchParams(seed=2, iterations=2000))
        assert a.best_layout != b.best_layout

    def test_trace_monotone_nondecreasing(self):
        result = optimize(GOLDEN, MAXIMIZE_ALL, SearchParams(seed=3, iterations=3000))
        scores = [s for _, s in result.trace]
        assert all(b >= a for a, b in zip(scores, scores[1:]))
        iterations = [i for i, _ in result.trace]
        assert iterations == sorted(iterations)

    def test_result_layout_feasible(self):
        rng = random.Random(11)
        layout = random_layout(rng, max_objects=6)
        result = optimize(layout, MAXIMIZE_ALL, SearchParams(seed=4, iterations=1500))
        fw = result.best_layout.frame.width
        fh = result.best_layout.frame.height
        for o in result.best_layout.objects:
            assert 0 <= o.x and o.x + o.w <= fw + 1e-9
            assert 0 <= o.y and o.y + o.h <= fh + 1e-9
            # sizes never change
            src = {s.id: s for s in layout.objects}[o.id]
            assert (o.w, o.h) == (src.w, src.h)

    def test_forbid_overlap_keeps_objects_apart(self):
        layout = make_layout(
            200, 200, [(0, 0, 40, 40), (50, 0, 40, 40), (100, 0, 40, 40), (0, 60, 40, 40)]
        )
        result = optimize(
            layout, MAXIMIZE_ALL, SearchParams(seed=5, iterations=2500, forbid_overlap=True)
        )
        objs = result.best_layout.objects
        for i in range(len(objs)):
            for j in range(i + 1, len(objs)):
                a, b = objs[i], objs[j]
                overlap = (
                    a.x < b.x + b.w and a.x + a.w > b.x and a.y < b.y + b.h and a.y + a.h > b.y
                )
                assert not overlap, (a.id, b.id)

    def test_best_score_matches_recomputation(self):
        result = optimize(GOLDEN, MAXIMIZE_ALL, SearchParams(seed=6, iterations=2000))
        assert result.best_score == pytest.approx(
            score(result.best_layout, MAXIMIZE_ALL), abs=1e-9
        )

    def test_single_object_converges_to_center(self):
        layout = make_layout(100, 100, [(3, 77, 20, 20)])
        result = optimize(layout, MAXIMIZE_ALL, SearchParams(seed=1, iterations=5000))
        assert evaluate(result.best_layout).av >= 0.999

    def test_rng_identifier_recorded(self):
        result = optimize(GOLDEN, MAXIMIZE_ALL, SearchParams(iterations=0))
        assert result.rng == "mt19937"

    def test_empty_layout(self):
        with pytest.raises(EmptyLayoutError):
            optimize(Layout(frame=Frame(10, 10), objects=()), MAXIMIZE_ALL, SearchParams())


def test_match_target_av_tolerance_across_seeds():
    # frozen empirically: 8 loose 10x10 objects reach |av - 0.95| <= 0.02
    # within 20k iterations for at least 9 of 10 seeds
    rng = random.Random(42)
    base = make_layout(
        200, 200, [(rng.uniform(0, 190), rng.uniform(0, 190), 10, 10) for _ in range(8)]
    )
    objective = ObjectiveSpec(mode="match_target", target=0.95)
    hits = 0
    for seed in range(10):
        result = optimize(base, objective, SearchParams(seed=seed, iterations=20_000))
        hits += abs(evaluate(result.best_layout).av - 0.95) <= 0.02
    assert hits >= 9


class TestGenerateGroups:
    def test_empty_targets(self):
        assert generate_groups(GOLDEN, [], SearchParams()) == []

    def test_single_target_at_own_av_is_immediate(self):
        base_av = evaluate(GOLDEN).av
        layouts = generate_groups(GOLDEN, [base_av], SearchParams(seed=9, iterations=50))
        assert len(layouts) == 1
        assert abs(evaluate(layouts[0]).av - base_av) <= 0.02

    def test_target_order_tracked(self):
        rng = random.Random(2)
        base = make_layout(
            200,
            200,
            [(rng.uniform(0, 190), rng.uniform(0, 190), 10, 10) for _ in range(6)],
        )
        targets = (0.95, 0.70, 0.60, 0.50)
        layouts = generate_groups(base, targets, SearchParams(seed=0, iterations=2000))
        avs = [evaluate(l).av for l in layouts]
        assert all(a >= b - 0.02 for a, b in zip(avs, avs[1:]))
