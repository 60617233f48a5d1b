import math

import numpy as np
import pytest

from gmepyramid import (
    DEFAULT_ZERO_TOL,
    PureState,
    base_area,
    base_edge,
    c_gme,
    canonical_bipartitions,
    classify,
    evaluate,
    full_spectrum,
    ghz_state,
    haar_random_state,
    height,
    permute_subsystems,
    random_product_state,
    triangle_measure,
    volume,
    w_state,
)
from gmepyramid.catalog import benchmark_states, phi_biseparable, psi_a, psi_b, psi_c

SQRT3_OVER_2 = math.sqrt(3) / 2

# Frozen against an independent brute-force partial-trace oracle.
ORACLE_VOLUMES = {
    "psi_A": 0.3468159541906515,
    "psi_B": 0.2788215657281302,
    "psi_C": 0.3060103917736113,
    "psi_D": 0.3399838180175669,
}


class TestBaseEdge:
    def test_ghz4_is_one(self):
        assert base_edge(full_spectrum(ghz_state(4))) == pytest.approx(1.0, abs=1e-14)

    def test_w4_equal_factors(self):
        assert base_edge(full_spectrum(w_state(4))) == pytest.approx(SQRT3_OVER_2, abs=1e-12)

    def test_zero_factor_short_circuits(self):
        spectrum = full_spectrum(random_product_state((2, 2, 2, 2), (2,), seed=3))
        assert base_edge(spectrum) == 0.0


class TestHeight:
    def test_ghz4(self):
        assert height(full_spectrum(ghz_state(4))) == pytest.approx(1.0, abs=1e-14)

    def test_ghz5(self):
        assert height(full_spectrum(ghz_state(5))) == pytest.approx(1.0, abs=1e-14)

    def test_biseparable_fixture_is_zero(self):
        assert height(full_spectrum(phi_biseparable())) == 0.0

    def test_three_parties_fixed_to_one(self):
        assert height(full_spectrum(ghz_state(3))) == 1.0

    def test_two_parties_rejected(self):
        with pytest.raises(ValueError, match="2-party"):
            height(full_spectrum(ghz_state(2)))


class TestBaseArea:
    def test_square(self):
        assert base_area(4, 1.0) == pytest.approx(1.0, rel=1e-12)

    def test_hexagon(self):
        assert base_area(6, 1.0) == pytest.approx(1.5 * math.sqrt(3), rel=1e-12)

    def test_degenerate_edge(self):
        assert base_area(5, 0.0) == 0.0

    def test_rejects_digon(self):
        with pytest.raises(ValueError):
            base_area(2, 1.0)


class TestVolume:
    def test_ghz4(self):
        assert volume(full_spectrum(ghz_state(4))).volume == pytest.approx(1 / 3, abs=1e-9)

    @pytest.mark.parametrize("name", sorted(ORACLE_VOLUMES))
    def test_benchmarks_match_oracle(self, name):
        state = benchmark_states()[name]
        assert volume(full_spectrum(state)).volume == pytest.approx(
            ORACLE_VOLUMES[name], abs=1e-12
        )

    def test_ghz5_closed_form(self):
        expected = 5 / (12 * math.tan(math.pi / 5))
        assert volume(full_spectrum(ghz_state(5))).volume == pytest.approx(expected, abs=1e-9)

    def test_biseparable_fixture_is_exactly_zero(self):
        assert volume(full_spectrum(phi_biseparable())).volume == 0.0

    def test_two_parties_rejected(self):
        with pytest.raises(ValueError, match="3 or more"):
            volume(full_spectrum(ghz_state(2)))

    def test_geometry_fields_are_consistent(self):
        for trial in range(20):
            geometry = volume(full_spectrum(haar_random_state((2, 2, 2, 2, 2), [71, trial])))
            assert geometry.volume == pytest.approx(
                geometry.base_area * geometry.height / 3.0, abs=1e-12
            )
            assert geometry.base_area == pytest.approx(
                base_area(geometry.n, geometry.base_edge), abs=1e-12
            )
            assert min(geometry.base_edge, geometry.height, geometry.volume) >= 0.0


class TestTriangleMeasure:
    def test_ghz3(self):
        assert triangle_measure(full_spectrum(ghz_state(3))) == pytest.approx(1.0, abs=1e-12)

    def test_w3(self):
        assert triangle_measure(full_spectrum(w_state(3))) == pytest.approx(8 / 9, abs=1e-12)

    def test_product_factor_kills_it(self):
        bell = np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2)
        state = PureState((2, 2, 2), np.kron([1.0, 0.0], bell))
        assert triangle_measure(full_spectrum(state)) == pytest.approx(0.0, abs=1e-7)

    def test_rejects_other_party_counts(self):
        with pytest.raises(ValueError, match="3 parties"):
            triangle_measure(full_spectrum(ghz_state(4)))


class TestCGme:
    def test_psi_a(self):
        assert c_gme(full_spectrum(psi_a())) == pytest.approx(SQRT3_OVER_2, abs=1e-12)

    def test_psi_c_exact(self):
        assert c_gme(full_spectrum(psi_c())) == pytest.approx(0.8, abs=1e-12)

    def test_ghz4(self):
        assert c_gme(full_spectrum(ghz_state(4))) == pytest.approx(1.0, abs=1e-12)


class TestClassify:
    def test_fully_separable_lists_every_cut(self):
        amps = np.zeros(16)
        amps[0] = 1.0
        label, zero_cuts = classify(full_spectrum(PureState((2, 2, 2, 2), amps)))
        assert label == "fully-separable"
        assert len(zero_cuts) == 7

    def test_biseparable_fixture(self):
        label, zero_cuts = classify(full_spectrum(phi_biseparable()))
        assert label == "biseparable"
        assert (1, 3) in [cut.subset for cut in zero_cuts]

    def test_ghz4_is_gme(self):
        label, zero_cuts = classify(full_spectrum(ghz_state(4)))
        assert label == "GME"
        assert zero_cuts == ()


class TestProperties:
    def test_permutation_invariance(self):
        for trial in range(25):
            state = haar_random_state((3, 2, 2, 2), [81, trial])
            rng = np.random.default_rng([82, trial])
            perm = [int(p) + 1 for p in rng.permutation(4)]
            shuffled = permute_subsystems(state, perm)
            for measure in (lambda s: volume(full_spectrum(s)).volume, lambda s: c_gme(full_spectrum(s))):
                assert abs(measure(shuffled) - measure(state)) < 1e-10

    def test_triangle_permutation_invariance(self):
        for trial in range(25):
            state = haar_random_state((2, 2, 2), [83, trial])
            rng = np.random.default_rng([84, trial])
            perm = [int(p) + 1 for p in rng.permutation(3)]
            before = triangle_measure(full_spectrum(state))
            after = triangle_measure(full_spectrum(permute_subsystems(state, perm)))
            assert abs(after - before) < 1e-10

    def test_nullity_on_random_product_states(self):
        for n, dims in [(4, (2, 2, 2, 2)), (5, (2, 2, 2, 2, 2))]:
            for trial in range(50):
                rng = np.random.default_rng([85, n, trial])
                k = int(rng.integers(1, n // 2 + 1))
                sites = sorted(int(s) + 1 for s in rng.choice(n, size=k, replace=False))
                state = random_product_state(dims, sites, [86, n, trial])
                assert volume(full_spectrum(state)).volume <= 1e-9

    def test_positive_volume_implies_no_zero_cuts(self):
        for trial in range(25):
            spectrum = full_spectrum(haar_random_state((2, 2, 2, 2), [87, trial]))
            if volume(spectrum).volume > DEFAULT_ZERO_TOL:
                _, zero_cuts = classify(spectrum)
                assert zero_cuts == ()

    @pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
    def test_ghz_closed_form(self, n):
        expected = n / (12 * math.tan(math.pi / n))
        assert volume(full_spectrum(ghz_state(n))).volume == pytest.approx(expected, abs=1e-9)

    def test_ghz_beats_w(self):
        v_ghz = volume(full_spectrum(ghz_state(4))).volume
        v_w = volume(full_spectrum(w_state(4))).volume
        assert v_w == pytest.approx(0.25, abs=1e-12)
        assert v_ghz > v_w


class TestEvaluate:
    def test_report_fields(self):
        report = evaluate(psi_b(), state_id="psi_B")
        assert report.state_id == "psi_B"
        assert report.n == 4
        assert report.volume == pytest.approx(ORACLE_VOLUMES["psi_B"], abs=1e-12)
        assert report.triangle is None
        assert report.classification == "GME"
        assert len(report.concurrences) == 7
        assert report.zero_cuts == ()

    def test_tripartite_report_has_triangle(self):
        report = evaluate(ghz_state(3))
        assert report.triangle == pytest.approx(1.0, abs=1e-12)
        assert report.volume == pytest.approx(math.sqrt(3) / 12, abs=1e-12)
        assert report.notes == ()

    def test_qutrit_triangle_note(self):
        report = evaluate(haar_random_state((3, 2, 2), seed=9))
        assert report.triangle is not None
        assert any("qubit" in note for note in report.notes)

    def test_two_party_report_skips_volume(self):
        report = evaluate(ghz_state(2))
        assert report.volume is None
        assert report.triangle is None
        assert report.c_gme == pytest.approx(1.0, abs=1e-12)
