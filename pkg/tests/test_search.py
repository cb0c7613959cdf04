import pytest

from csdepth import (
    InputError,
    colourful_depth,
    minimize_depth,
    random_configuration,
    theorem_bound,
    validate,
)


class TestRandomConfiguration:
    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_validity(self, d):
        report = validate(random_configuration(d, 42))
        assert report.zero_in_core
        assert report.zero_interior
        assert report.general_position

    def test_deterministic(self):
        assert random_configuration(2, 7) == random_configuration(2, 7)

    def test_seed_sensitivity(self):
        assert random_configuration(2, 7) != random_configuration(2, 8)

    def test_d1_pairs_straddle_origin(self):
        config = random_configuration(1, 5)
        for cls in config.colours:
            values = [p[0] for p in cls]
            assert min(values) < 0 < max(values)

    def test_rejects_nonpositive_dimension(self):
        with pytest.raises(InputError):
            random_configuration(0, 1)


class TestMinimizeDepth:
    def test_small_budget_d2(self):
        report = minimize_depth(2, restarts=3, steps=80, seed=9)
        assert report.best_depth >= theorem_bound(2)
        assert colourful_depth(report.best_config).depth == report.best_depth
        assert validate(report.best_config).zero_in_core

    def test_history_strictly_decreasing_within_restart(self):
        report = minimize_depth(2, restarts=3, steps=80, seed=9)
        by_restart = {}
        for r, _, depth in report.history:
            by_restart.setdefault(r, []).append(depth)
        for depths in by_restart.values():
            assert all(a > b for a, b in zip(depths, depths[1:]))

    def test_history_iterations_increase(self):
        report = minimize_depth(2, restarts=2, steps=60, seed=4)
        by_restart = {}
        for r, it, _ in report.history:
            by_restart.setdefault(r, []).append(it)
        for its in by_restart.values():
            assert all(a < b for a, b in zip(its, its[1:]))

    def test_comparison_constants(self):
        report = minimize_depth(3, restarts=1, steps=5, seed=0)
        assert report.comparison == {
            "lower_bound": 6,
            "prior_lower": 6,
            "conjecture": 10,
            "bm_bound": 3,
        }

    def test_deterministic(self):
        a = minimize_depth(2, restarts=2, steps=50, seed=3)
        b = minimize_depth(2, restarts=2, steps=50, seed=3)
        assert a.best_depth == b.best_depth
        assert a.best_config == b.best_config
        assert a.history == b.history

    def test_rejects_bad_budgets(self):
        with pytest.raises(InputError):
            minimize_depth(2, restarts=0, steps=10, seed=0)
        with pytest.raises(InputError):
            minimize_depth(2, restarts=1, steps=0, seed=0)

    def test_reaches_conjectured_floor_d2(self):
        report = minimize_depth(2, restarts=8, steps=300, seed=0)
        assert report.best_depth == 5

    def test_never_below_theorem_bound_many_seeds(self):
        for seed in range(6):
            report = minimize_depth(2, restarts=2, steps=60, seed=seed)
            assert report.best_depth >= 4
