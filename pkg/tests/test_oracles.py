import pytest

from spreadopt import MonteCarloSpreadOracle, noisy_oracle, wolsey_instance
from spreadopt.oracles import FunctionOracle

from conftest import make_graph, random_cover_oracle


class TestWolsey:
    def test_closed_form_values_l3(self):
        f = wolsey_instance(3)
        v = [f.labels.index(x) for x in ("v1", "v2", "v3")]
        w = [f.labels.index(x) for x in ("w1", "w2")]
        assert f.eval(v) == pytest.approx(1.75, abs=1e-15)          # 2 - 1/2^(l-1)
        assert f.eval(w) == pytest.approx(1.875, abs=1e-15)         # 2 - 1/2^l
        assert f.eval([]) == 0.0

    @pytest.mark.parametrize("l", [1, 2, 4, 6])
    def test_singletons(self, l):
        f = wolsey_instance(l)
        assert f.eval([0]) == pytest.approx(1 - 0.5 ** (l + 1), abs=1e-15)
        assert f.eval([1]) == pytest.approx(1 - 0.5 ** (l + 1), abs=1e-15)
        for i in range(1, l + 1):
            assert f.eval([i + 1]) == pytest.approx(0.5 ** (i - 1), abs=1e-15)

    def test_v_gain_beats_w_gain(self):
        # after picking v1..vi the next v always has the strictly larger gain
        l = 5
        f = wolsey_instance(l)
        picked = []
        for i in range(1, l + 1):
            base = f.eval(picked)
            gain_v = f.eval(picked + [i + 1]) - base
            gain_w = f.eval(picked + [0]) - base
            assert gain_v > gain_w
            picked.append(i + 1)

    def test_monotone_submodular_spot_checks(self, rng):
        f = wolsey_instance(4)
        ground = list(range(f.ground_set_size))
        for _ in range(200):
            s = set(int(x) for x in rng.choice(ground, size=2, replace=False))
            t = s | {int(rng.integers(f.ground_set_size))}
            assert f.eval(s) <= f.eval(t) + 1e-15
            w = int(rng.integers(f.ground_set_size))
            if w not in t:
                assert f.eval(s | {w}) - f.eval(s) >= f.eval(t | {w}) - f.eval(t) - 1e-15


class TestNoisy:
    def test_zero_delta_is_identity(self, rng):
        base = random_cover_oracle(rng)
        noisy = noisy_oracle(base, 0.0, rng_seed=5)
        for _ in range(20):
            s = [int(x) for x in rng.choice(base.ground_set_size, size=3, replace=False)]
            assert noisy.eval(s) == base.eval(s)

    def test_bounds_and_determinism(self, rng):
        base = random_cover_oracle(rng)
        noisy = noisy_oracle(base, 0.3, rng_seed=5)
        again = noisy_oracle(base, 0.3, rng_seed=5)
        other = noisy_oracle(base, 0.3, rng_seed=6)
        diverged = False
        for _ in range(30):
            s = [int(x) for x in rng.choice(base.ground_set_size, size=2, replace=False)]
            exact = base.eval(s)
            val = noisy.eval(s)
            assert (1 - 0.3) * exact - 1e-12 <= val <= exact + 1e-12
            assert val == noisy.eval(s)          # memo consistency
            assert val == again.eval(s)          # same (S, rng_seed) -> same value
            diverged = diverged or other.eval(s) != val
        assert diverged

    def test_empty_set_stays_zero(self, rng):
        noisy = noisy_oracle(random_cover_oracle(rng), 0.5, rng_seed=1)
        assert noisy.eval([]) == 0.0

    def test_delta_validation(self, rng):
        base = random_cover_oracle(rng)
        with pytest.raises(ValueError):
            noisy_oracle(base, 1.0)
        with pytest.raises(ValueError):
            noisy_oracle(base, -0.1)


class TestMonteCarloOracle:
    def test_empty_is_zero(self):
        g = make_graph(2, [(0, 1, 0.5)])
        oracle = MonteCarloSpreadOracle(g, "ic", n_sims=50, master_seed=0)
        assert oracle.eval([]) == 0.0

    def test_same_set_same_estimate_across_instances(self):
        g = make_graph(3, [(0, 1, 0.5), (1, 2, 0.5)])
        a = MonteCarloSpreadOracle(g, "ic", n_sims=500, master_seed=9)
        b = MonteCarloSpreadOracle(g, "ic", n_sims=500, master_seed=9)
        assert a.eval([0, 2]) == b.eval([2, 0])

    def test_distinct_sets_use_independent_streams(self):
        g = make_graph(3, [(0, 1, 0.5), (1, 2, 0.5)])
        oracle = MonteCarloSpreadOracle(g, "ic", n_sims=500, master_seed=9)
        assert oracle.eval([0]) != oracle.eval([0, 1]) or True  # just exercise both
        assert oracle.estimate([0]).n_sims == 500


def test_function_oracle_wraps_callable():
    f = FunctionOracle(lambda s: float(len(s)), ground_set_size=4)
    assert f.eval([1, 2]) == 2.0
    assert f.is_exact
