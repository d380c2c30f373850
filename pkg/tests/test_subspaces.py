import math

import numpy as np
import pytest

from rotosense.spin_core import PureState, SpinLabel, rotation_operator_euler
from rotosense.subspaces import (
    SearchConfig,
    SubspaceFrame,
    catalog,
    construct_one_ac_family,
    construct_two_ac_family,
    kmax_scan,
    objective_g_lm,
    objective_g_lm_trace,
    objective_g_t,
    one_ac_family_dimension,
    rotation_equivalent,
    search_subspace,
    spin2_plane,
    two_ac_family_dimension,
    upper_bound_kmax,
    verify_subspace,
)
from conftest import random_pure


def random_frame(spin, k, rng):
    x = rng.normal(size=(spin.dimension, k)) + 1j * rng.normal(size=(spin.dimension, k))
    q, _ = np.linalg.qr(x)
    return SubspaceFrame.from_amplitudes(spin, q[:, :k].T)


class TestObjectives:
    def test_spin2_plane_dipole_terms_vanish(self):
        frame = spin2_plane()
        for m in (-1, 0, 1):
            assert objective_g_lm(frame, 1, m) < 1e-28

    def test_single_qubit_state_value(self):
        # <T_10> on |1/2,1/2> is 1/sqrt2, so the objective is 1/2
        frame = SubspaceFrame(SpinLabel(1), (PureState.basis_state(SpinLabel(1), 1),))
        assert objective_g_lm(frame, 1, 0) == pytest.approx(0.5, abs=1e-14)

    def test_full_space_frame_positive(self, rng):
        s = SpinLabel(3)
        frame = random_frame(s, 4, rng)
        assert objective_g_t(frame, 1) > 0.1

    def test_coherent_state_positive(self):
        s = SpinLabel(6)
        frame = SubspaceFrame(s, (PureState.basis_state(s, 6),))
        assert objective_g_t(frame, 1) > 0.1

    def test_pairwise_vs_trace_form(self, rng):
        # per (L, M): trace form = pairwise(L, M) + strict-pairs(L, -M);
        # summed over M the trace form double counts off-diagonal pairs
        s = SpinLabel(5)
        frame = random_frame(s, 3, rng)
        for L in (1, 2, 3):
            for M in range(-L, L + 1):
                tr = objective_g_lm_trace(frame, L, M)
                pw = objective_g_lm(frame, L, M)
                assert tr >= pw - 1e-12
            total_tr = sum(objective_g_lm_trace(frame, L, M) for M in range(-L, L + 1))
            diag = 0.0
            strict = 0.0
            m = frame.matrix()
            from rotosense.multipole import multipole_stack

            ts = multipole_stack(s.two_j, L, L)
            for M in range(-L, L + 1):
                b = m @ ts[M + L] @ m.conj().T
                diag += float(np.sum(np.abs(np.diag(b)) ** 2))
                iu = np.triu_indices(frame.k, 1)
                strict += float(np.sum(np.abs(b[iu]) ** 2))
            assert total_tr == pytest.approx(diag + 2 * strict, abs=1e-10)

    def test_zero_sets_coincide(self):
        frame = catalog()["(7/2,2,2)"].frame
        for L in (1, 2):
            for M in range(-L, L + 1):
                assert objective_g_lm(frame, L, M) < 1e-24
                assert objective_g_lm_trace(frame, L, M) < 1e-24

    def test_invariance_under_span_preserving_mixing(self, rng):
        # G_t depends only on the projector
        frame = catalog()["(3,3,1)"].frame
        u = np.linalg.qr(rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)))[0]
        mixed = SubspaceFrame.from_amplitudes(frame.spin, u @ frame.matrix())
        assert objective_g_t(mixed, 1) == pytest.approx(objective_g_t(frame, 1), abs=1e-10)

    def test_invariance_under_global_rotation(self, rng):
        frame = catalog()["(5,2,2)"].frame
        r = rotation_operator_euler(frame.spin, *rng.uniform(0, 2 * math.pi, 3))
        assert objective_g_t(frame.rotated(r), 2) == pytest.approx(
            objective_g_t(frame, 2), abs=1e-9
        )


class TestVerify:
    def test_spin2_plane_first_order(self):
        cert = verify_subspace(spin2_plane(), 1)
        assert cert.verified
        assert cert.objective_value < 1e-24

    def test_spin2_plane_not_second_order(self):
        # both basis states are 2-AC, but L=2 cross terms survive, so the
        # span is not a 2-AC subspace (mixtures are 2-AC states regardless)
        cert = verify_subspace(spin2_plane(), 2)
        assert not cert.verified
        assert cert.objective_value == pytest.approx(4 / 7, abs=1e-12)

    def test_spin3_triple_orders(self):
        frame = catalog()["(3,3,1)"].frame
        assert verify_subspace(frame, 1).verified
        assert not verify_subspace(frame, 2).verified

    def test_catalog_entries_verify(self):
        for name, entry in catalog().items():
            cert = verify_subspace(entry.frame, entry.order_t, tolerance=1e-10)
            assert cert.verified, (name, cert.objective_value)


class TestSearch:
    def test_finds_spin2_plane(self):
        result = search_subspace(SpinLabel(4), 2, 1, SearchConfig(seed=11, restarts=8))
        assert result.found
        assert result.certificate.objective_value <= 1e-10

    def test_spin32_negative_result(self):
        result = search_subspace(SpinLabel(3), 2, 1, SearchConfig(seed=11, restarts=8))
        assert not result.found
        assert result.certificate.objective_value > 1e-3

    def test_determinism(self):
        cfg = SearchConfig(seed=555, restarts=6)
        a = search_subspace(SpinLabel(4), 2, 1, cfg)
        b = search_subspace(SpinLabel(4), 2, 1, cfg)
        assert a.certificate.objective_value == b.certificate.objective_value
        assert np.array_equal(a.certificate.frame.matrix(), b.certificate.frame.matrix())
        assert [r.objective for r in a.records] == [r.objective for r in b.records]

    def test_threaded_matches_serial(self, monkeypatch):
        cfg = SearchConfig(seed=99, restarts=4)
        serial = search_subspace(SpinLabel(4), 2, 1, cfg)
        monkeypatch.setenv("ROTOSENSE_THREADS", "4")
        threaded = search_subspace(SpinLabel(4), 2, 1, cfg)
        assert serial.certificate.objective_value == threaded.certificate.objective_value
        assert np.array_equal(
            serial.certificate.frame.matrix(), threaded.certificate.frame.matrix()
        )

    def test_input_gates(self):
        with pytest.raises(ValueError):
            search_subspace(SpinLabel(4), 9, 1, SearchConfig(seed=1))
        with pytest.raises(ValueError):
            SearchConfig(seed=1, restarts=0)


class TestBounds:
    def test_upper_bound_values(self):
        assert upper_bound_kmax(SpinLabel(4), 1) == 2
        assert upper_bound_kmax(SpinLabel(2), 1) == 1
        assert upper_bound_kmax(SpinLabel(7), 2) == 2
        assert upper_bound_kmax(SpinLabel(3), 1) == 1
        assert upper_bound_kmax(SpinLabel(9), 1) == 4

    def test_kmax_scan_spin2(self):
        scan = kmax_scan(SpinLabel(4), 1, SearchConfig(seed=31, restarts=12))
        assert scan.k_max == 2
        assert scan.bound == 2
        assert scan.k_max <= scan.bound
        assert scan.anomalies == ()

    def test_kmax_scan_spin92_reaches_bound(self):
        scan = kmax_scan(SpinLabel(9), 1, SearchConfig(seed=71, restarts=24))
        assert scan.k_max == 4 == scan.bound

    def test_kmax_scan_spin4_second_order_is_one(self):
        # pure 2-AC states exist at j=4 but no two-dimensional subspace
        scan = kmax_scan(SpinLabel(8), 2, SearchConfig(seed=72, restarts=24))
        assert scan.k_max == 1
        assert scan.bound == 2

    def test_kmax_scan_spin7_second_order_is_three(self):
        scan = kmax_scan(SpinLabel(14), 2, SearchConfig(seed=73, restarts=24))
        assert scan.k_max == 3
        assert scan.bound == 4

    def test_spin1_pairs_always_fail_first_order(self, rng):
        # every 2-dim spin-1 frame keeps a dipole matrix element
        s = SpinLabel(2)
        for _ in range(50):
            frame = random_frame(s, 2, rng)
            assert objective_g_t(frame, 1) > 1e-3


class TestConstructions:
    def test_one_ac_spin2_table_row(self):
        frame = construct_one_ac_family(SpinLabel(4))
        assert frame.k == 2
        want0 = np.zeros(5); want0[0] = want0[4] = 1 / math.sqrt(2)
        want1 = np.zeros(5); want1[2] = 1.0
        assert np.abs(frame.basis[0].amplitudes - want0).max() < 1e-14
        assert np.abs(frame.basis[1].amplitudes - want1).max() < 1e-14

    def test_one_ac_spin72_table_row(self):
        frame = construct_one_ac_family(SpinLabel(7))
        assert frame.k == 2
        want0 = np.zeros(8); want0[0] = want0[7] = 1 / math.sqrt(2)
        want1 = np.zeros(8); want1[2] = want1[5] = 1 / math.sqrt(2)
        assert np.abs(frame.basis[0].amplitudes - want0).max() < 1e-14
        assert np.abs(frame.basis[1].amplitudes - want1).max() < 1e-14

    def test_one_ac_spin4_table_row(self):
        frame = construct_one_ac_family(SpinLabel(8))
        assert frame.k == 3
        want1 = np.zeros(9); want1[2] = want1[6] = 1 / math.sqrt(2)
        want2 = np.zeros(9); want2[4] = 1.0
        assert np.abs(frame.basis[1].amplitudes - want1).max() < 1e-14
        assert np.abs(frame.basis[2].amplitudes - want2).max() < 1e-14

    @pytest.mark.parametrize("two_j", list(range(2, 42)))
    def test_one_ac_family_verifies_and_sizes(self, two_j):
        spin = SpinLabel(two_j)
        frame = construct_one_ac_family(spin)
        assert objective_g_t(frame, 1) <= 1e-12
        assert frame.k == one_ac_family_dimension(spin)

    def test_two_ac_spin5_table_row(self):
        frame = construct_two_ac_family(SpinLabel(10))
        assert frame.k == 1
        want = np.zeros(11)
        want[0] = want[10] = 1 / math.sqrt(7)
        want[3] = want[7] = math.sqrt(5 / 14)
        assert np.abs(frame.basis[0].amplitudes - want).max() < 1e-10

    def test_two_ac_spin11_table_rows(self):
        frame = construct_two_ac_family(SpinLabel(22))
        assert frame.k == 2
        w1 = np.zeros(23)
        w1[0] = w1[22] = math.sqrt(19); w1[6] = w1[16] = math.sqrt(77)
        w1 /= 8 * math.sqrt(3)
        w2 = np.zeros(23)
        w2[3] = w2[19] = math.sqrt(2); w2[9] = w2[13] = 1.0
        w2 /= math.sqrt(6)
        assert np.abs(frame.basis[0].amplitudes - w1).max() < 1e-10
        assert np.abs(frame.basis[1].amplitudes - w2).max() < 1e-10

    def test_two_ac_spin35_halves_table_rows(self):
        frame = construct_two_ac_family(SpinLabel(35))
        assert frame.k == 3
        t1 = np.zeros(36)
        t1[0] = t1[35] = math.sqrt(107); t1[9] = t1[26] = math.sqrt(595)
        t1 /= 6 * math.sqrt(39)
        t2 = np.zeros(36)
        t2[3] = t2[32] = math.sqrt(233); t2[12] = t2[23] = math.sqrt(307)
        t2 /= 6 * math.sqrt(30)
        t3 = np.zeros(36)
        t3[6] = t3[29] = math.sqrt(305); t3[15] = t3[20] = math.sqrt(73)
        t3 /= 6 * math.sqrt(21)
        for got, want in zip(frame.basis, (t1, t2, t3)):
            assert np.abs(got.amplitudes - want).max() < 1e-10

    @pytest.mark.parametrize("two_j", list(range(10, 82)))
    def test_two_ac_family_verifies_and_sizes(self, two_j):
        spin = SpinLabel(two_j)
        frame = construct_two_ac_family(spin)
        assert objective_g_t(frame, 2) <= 1e-10
        assert frame.k == two_ac_family_dimension(spin)

    def test_two_ac_needs_j_at_least_5(self):
        with pytest.raises(ValueError):
            construct_two_ac_family(SpinLabel(9))


class TestRotationEquivalence:
    def test_frame_vs_itself(self):
        frame = spin2_plane()
        eq = rotation_equivalent(frame, frame)
        assert eq.equivalent
        assert eq.residual < 1e-12

    def test_real_form_matches_plane(self):
        eq = rotation_equivalent(spin2_plane(), catalog()["(2,2,1)-rotated"].frame, t=1)
        assert eq.equivalent
        assert eq.residual < 1e-8

    def test_inequivalent_frames(self):
        a = catalog()["(5/2,2,1)-V1"].frame
        b = catalog()["(5/2,2,1)-V2"].frame
        eq = rotation_equivalent(a, b, starts=12)
        assert not eq.equivalent
        assert eq.residual > 1e-2

    def test_shape_gate(self):
        with pytest.raises(ValueError):
            rotation_equivalent(spin2_plane(), catalog()["(3,3,1)"].frame)
