"""Anticoherent subspaces: objectives, numerical search, constructions, catalog.

A k-dimensional subspace V of the spin-j space is t-AC when every unit
vector in it is a t-AC state; equivalently all matrix elements
<psi_a| T_LM |psi_b> between frame vectors vanish for 1 <= L <= t.  The
objective

    G_t = sum_{L=1..t} sum_M sum_{a <= b} |<psi_a| T_LM |psi_b>|^2

is zero exactly on such frames, and its zeros are found by projected
gradient descent over orthonormal k-frames with deterministic multi-start.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import minimize

from .multipole import multipole_stack
from .spin_core import (
    ORTHONORMALITY_TOL,
    PureState,
    SpinLabel,
    rotation_operator_euler,
)

SUCCESS_THRESHOLD = 1e-10
ROTATION_EQUIVALENCE_TOL = 1e-8


# ---------------------------------------------------------------------------
# Frames and certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubspaceFrame:
    """Ordered orthonormal basis of a candidate subspace."""

    spin: SpinLabel
    basis: tuple

    def __post_init__(self):
        states = tuple(self.basis)
        if not 1 <= len(states) <= self.spin.dimension:
            raise ValueError(f"frame dimension {len(states)} out of range")
        for s in states:
            if s.spin != self.spin:
                raise ValueError("frame states must share the frame spin")
        mat = np.array([s.amplitudes for s in states])
        dev = float(np.abs(mat @ mat.conj().T - np.eye(len(states))).max())
        if dev > ORTHONORMALITY_TOL:
            raise ValueError(f"frame not orthonormal: deviation {dev:.3e}")
        object.__setattr__(self, "basis", states)

    @classmethod
    def from_amplitudes(cls, spin: SpinLabel, rows) -> "SubspaceFrame":
        return cls(spin, tuple(PureState(spin, np.asarray(r, dtype=complex)) for r in rows))

    @property
    def k(self) -> int:
        return len(self.basis)

    def matrix(self) -> np.ndarray:
        return np.array([s.amplitudes for s in self.basis])

    def projector(self) -> np.ndarray:
        m = self.matrix()
        return m.conj().T @ m

    def rotated(self, unitary: np.ndarray) -> "SubspaceFrame":
        return SubspaceFrame(
            self.spin, tuple(PureState(self.spin, unitary @ s.amplitudes) for s in self.basis)
        )


@dataclass(frozen=True)
class SubspaceCertificate:
    frame: SubspaceFrame
    order_t: int
    objective_value: float
    tolerance: float
    verified: bool

    def __post_init__(self):
        if self.verified != (self.objective_value <= self.tolerance):
            raise ValueError("verified flag inconsistent with objective value")


@dataclass(frozen=True)
class SearchConfig:
    """Deterministic multi-start search parameters; seed is mandatory."""

    seed: int
    restarts: int = 64
    max_iterations: int = 5000
    success_threshold: float = SUCCESS_THRESHOLD
    initial_step: float = 0.1
    armijo: float = 1e-4
    backtrack: float = 0.5
    max_backtracks: int = 40

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.success_threshold <= 0:
            raise ValueError("success_threshold must be positive")


# ---------------------------------------------------------------------------
# Objectives
# ---------------------------------------------------------------------------

def _pair_sum(b: np.ndarray) -> float:
    """sum_{a <= b} |B_ab|^2 for one operator block."""
    k = b.shape[0]
    iu = np.triu_indices(k)
    return float(np.sum(np.abs(b[iu]) ** 2))


def objective_g_lm(frame: SubspaceFrame, L: int, M: int) -> float:
    """Pairwise form: sum over ordered pairs a <= b of |<psi_a|T_LM|psi_b>|^2."""
    ts = multipole_stack(frame.spin.two_j, L, L)
    t = ts[M + L]
    m = frame.matrix()
    return _pair_sum(m @ t @ m.conj().T)


def objective_g_lm_trace(frame: SubspaceFrame, L: int, M: int) -> float:
    """Projector form Tr(Pi T_LM Pi T_LM^dag) = ||Psi T_LM Psi^dag||_F^2.

    Counts off-diagonal pairs twice relative to `objective_g_lm`; both vanish
    together once summed over M.
    """
    ts = multipole_stack(frame.spin.two_j, L, L)
    t = ts[M + L]
    m = frame.matrix()
    return float(np.sum(np.abs(m @ t @ m.conj().T) ** 2))


def objective_g_t(frame: SubspaceFrame, t: int) -> float:
    """G_t = sum over L = 1..t and all M of the pairwise objective."""
    if not 1 <= t <= frame.spin.two_j:
        raise ValueError(f"order t must satisfy 1 <= t <= 2j = {frame.spin.two_j}")
    ts = multipole_stack(frame.spin.two_j, 1, t)
    m = frame.matrix()
    blocks = np.einsum("kd,ade,le->akl", m, ts, m.conj())
    k = frame.k
    iu = np.triu_indices(k)
    return float(np.sum(np.abs(blocks[:, iu[0], iu[1]]) ** 2))


def verify_subspace(frame: SubspaceFrame, t: int, tolerance: float = SUCCESS_THRESHOLD) -> SubspaceCertificate:
    """Certificate for the frame at order t, with a random-vector spot check.

    Besides the frame objective, 20 deterministic pseudo-random unit-vector
    pairs in the span are tested directly for vanishing T_LM matrix elements
    (the all-pairs characterization of an anticoherent subspace).
    """
    g = objective_g_t(frame, t)
    verified = g <= tolerance
    if verified and frame.k >= 1:
        ts = multipole_stack(frame.spin.two_j, 1, t)
        m = frame.matrix()
        rng = np.random.default_rng(20240000 + 997 * frame.spin.two_j + t)
        for _ in range(20):
            c1 = rng.normal(size=frame.k) + 1j * rng.normal(size=frame.k)
            c2 = rng.normal(size=frame.k) + 1j * rng.normal(size=frame.k)
            v1 = c1 @ m
            v2 = c2 @ m
            v1 /= np.linalg.norm(v1)
            v2 /= np.linalg.norm(v2)
            worst = float(np.abs(np.einsum("d,ade,e->a", v1.conj(), ts, v2)).max())
            # spot-check tolerance scales with the frame gate (amplitudes vs squares)
            if worst > 10 * math.sqrt(max(tolerance, 1e-300)):
                verified = False
                break
    return SubspaceCertificate(frame, t, g, tolerance, verified)


# ---------------------------------------------------------------------------
# Numerical search
# ---------------------------------------------------------------------------

def _orthonormalize_rows(psi: np.ndarray) -> np.ndarray:
    q, r = np.linalg.qr(psi.conj().T)
    phases = np.sign(np.diag(r).real + 1e-300)
    return (q * phases).conj().T


def _trace_objective_and_gradient(psi: np.ndarray, ts: np.ndarray):
    """sum_ops ||psi T psi^dag||_F^2 and its conjugate-Wirtinger gradient."""
    pt = np.einsum("kd,ade->ake", psi, ts)
    b = np.einsum("ake,le->akl", pt, psi.conj())
    value = float(np.sum(np.abs(b) ** 2))
    ptd = np.einsum("kd,aed->ake", psi, ts.conj())
    grad = np.einsum("alk,ald->kd", b.conj(), pt) + np.einsum("akl,ald->kd", b, ptd)
    return value, grad


@dataclass(frozen=True)
class RestartRecord:
    index: int
    objective: float
    iterations: int
    converged: bool


@dataclass(frozen=True)
class SearchResult:
    certificate: SubspaceCertificate
    records: Tuple[RestartRecord, ...]
    config: SearchConfig

    @property
    def found(self) -> bool:
        return self.certificate.verified


def _descend(psi, ts, config, gate, max_iterations):
    """Barzilai-Borwein-scaled projected descent until the gate or a stall."""
    f, g = _trace_objective_and_gradient(psi, ts)
    step = config.initial_step / max(1.0, float(np.linalg.norm(g)))
    prev: Optional[Tuple[np.ndarray, np.ndarray]] = None
    iterations = 0
    for _ in range(max_iterations):
        if f <= gate:
            break
        gn2 = float(np.sum(np.abs(g) ** 2))
        if gn2 < 1e-60:
            break
        if prev is not None:
            dpsi = psi - prev[0]
            dg = g - prev[1]
            denom = abs(float(np.sum((dpsi.conj() * dg).real)))
            if denom > 1e-300:
                step = float(np.sum(np.abs(dpsi) ** 2)) / denom
        moved = False
        for _bt in range(config.max_backtracks):
            cand = _orthonormalize_rows(psi - step * g)
            fc, gc = _trace_objective_and_gradient(cand, ts)
            if fc < f - config.armijo * step * gn2 or fc < f * (1 - 1e-12):
                moved = True
                break
            step *= config.backtrack
        iterations += 1
        if not moved:
            break
        prev = (psi, g)
        psi, f, g = cand, fc, gc
    return psi, f, iterations


def _run_restart(index, child_seed, two_j, k, ts, config):
    rng = np.random.default_rng(child_seed)
    d = two_j + 1
    psi = _orthonormalize_rows(rng.normal(size=(k, d)) + 1j * rng.normal(size=(k, d)))
    # the trace form over-counts off-diagonal pairs at most 2x, so this
    # internal gate implies the reported pairwise G_t meets the threshold
    gate = config.success_threshold / 2
    psi, f, iterations = _descend(psi, ts, config, gate, config.max_iterations)
    return index, psi, f, iterations


def search_subspace(spin: SpinLabel, k: int, t: int, config: SearchConfig) -> SearchResult:
    """Minimize G_t over orthonormal k-frames with seeded multi-start descent.

    Each restart draws an independent frame from a child seed of
    config.seed, descends with Barzilai-Borwein-scaled backtracking steps and
    QR re-orthonormalization, and stops at the success gate.  The best frame
    across restarts is certified; not reaching the gate is a valid negative
    result, reported with the best objective found.  Restarts run in a
    thread pool when ROTOSENSE_THREADS > 1; aggregation is order-independent
    (minimum objective, lowest restart index on ties).
    """
    if not 1 <= k <= spin.dimension:
        raise ValueError(f"k must be in 1..{spin.dimension}")
    if not 1 <= t <= spin.two_j:
        raise ValueError(f"t must be in 1..2j = {spin.two_j}")
    ts = multipole_stack(spin.two_j, 1, t)
    children = np.random.SeedSequence(config.seed).spawn(config.restarts)
    workers = int(os.environ.get("ROTOSENSE_THREADS", "1") or "1")
    results = []
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_restart, i, child, spin.two_j, k, ts, config)
                for i, child in enumerate(children)
            ]
            results = [f.result() for f in futures]
    else:
        results = [
            _run_restart(i, child, spin.two_j, k, ts, config)
            for i, child in enumerate(children)
        ]
    results.sort(key=lambda r: (r[2], r[0]))
    _, best_psi, best_f, _ = results[0]
    records = tuple(
        RestartRecord(i, float(f), int(it), bool(f <= config.success_threshold / 2))
        for i, _psi, f, it in sorted(results, key=lambda r: r[0])
    )
    if best_f <= config.success_threshold / 2:
        # a hit is already inside its basin; polishing to the machine floor
        # removes the O(sqrt(threshold)) frame noise left by the stop gate
        best_psi, _, _ = _descend(best_psi, ts, config, 0.0, config.max_iterations)
    frame = SubspaceFrame.from_amplitudes(spin, _orthonormalize_rows(best_psi))
    certificate = verify_subspace(frame, t, config.success_threshold)
    return SearchResult(certificate, records, config)


def upper_bound_kmax(spin: SpinLabel, t: int) -> int:
    """floor((2j - t + 1)/(t + 1)), from counting orthonormal Schmidt vectors."""
    if not 1 <= t <= spin.two_j:
        raise ValueError(f"t must be in 1..2j = {spin.two_j}")
    return (spin.two_j - t + 1) // (t + 1)


@dataclass(frozen=True)
class KmaxScanEntry:
    k: int
    found: bool
    best_objective: float


@dataclass(frozen=True)
class KmaxScan:
    spin: SpinLabel
    t: int
    k_max: int
    bound: int
    entries: Tuple[KmaxScanEntry, ...]
    anomalies: Tuple[int, ...]  # k values found after a smaller k failed


def kmax_scan(spin: SpinLabel, t: int, config: SearchConfig) -> KmaxScan:
    """Largest k for which the search reaches a zero of G_t.

    Scans every k up to the dimension bound even past a failure (optimizer
    misses at smaller k are reported as anomalies rather than silently
    truncating the scan).
    """
    bound = upper_bound_kmax(spin, t)
    entries: List[KmaxScanEntry] = []
    found_ks: List[int] = []
    for k in range(1, max(bound, 1) + 1):
        result = search_subspace(spin, k, t, replace(config, seed=config.seed + k))
        entries.append(KmaxScanEntry(k, result.found, result.certificate.objective_value))
        if result.found:
            found_ks.append(k)
    k_max = max(found_ks, default=0)
    anomalies = tuple(
        k for k in found_ks if any(e.k < k and not e.found for e in entries)
    )
    return KmaxScan(spin, t, k_max, bound, tuple(entries), anomalies)


# ---------------------------------------------------------------------------
# Constructive families
# ---------------------------------------------------------------------------

def one_ac_family_dimension(spin: SpinLabel) -> int:
    """Dimension of the generic 1-AC family below.

    floor((j-1)/2) + 1 paired-cat states, plus the central |j,0> state when
    j is an integer and 2j - 3 - 4*floor((j-1)/2) > 0 (even integer j).
    """
    j2 = spin.two_j
    amax = (j2 - 2) // 4  # floor((j-1)/2)
    extra = 1 if (j2 % 2 == 0 and j2 - 3 - 4 * amax > 0) else 0
    return amax + 1 + extra


def construct_one_ac_family(spin: SpinLabel) -> SubspaceFrame:
    """Generic 1-AC subspace from sparse +/-m cat states.

    States (0_{2a}, 1, 0_{2j-4a-1}, 1, 0_{2a})/sqrt(2) for
    a = 0..floor((j-1)/2), plus (0_j, 1, 0_j) when j is an even integer.
    The m-level layout makes every J_z, J_+/- matrix element between frame
    vectors vanish identically.
    """
    if spin.two_j < 2:
        raise ValueError("construction needs j >= 1")
    d = spin.dimension
    rows = []
    amax = (spin.two_j - 2) // 4
    for a in range(amax + 1):
        v = np.zeros(d)
        v[2 * a] = 1.0 / math.sqrt(2)
        v[2 * a + (spin.two_j - 4 * a - 1) + 1] = 1.0 / math.sqrt(2)
        rows.append(v)
    if spin.two_j % 2 == 0 and spin.two_j - 3 - 4 * amax > 0:
        v = np.zeros(d)
        v[spin.two_j // 2] = 1.0
        rows.append(v)
    return SubspaceFrame.from_amplitudes(spin, rows)


def two_ac_level_offset(spin: SpinLabel) -> int:
    """kappa = ceil(j - sqrt(j(j+1)/3)), the inner-level offset of the family."""
    j = spin.j
    return math.ceil(j - math.sqrt(j * (j + 1) / 3.0) - 1e-12)


def two_ac_family_dimension(spin: SpinLabel) -> int:
    """Dimension of the generic 2-AC family below.

    The number of states is limited by two gap conditions: the inner +/-m
    pair of each state must be at least 3 apart (a <= (2j - 2 kappa - 5)/6)
    and the two m-ladders must stay at least 3 apart across states
    (a <= (kappa - 2)/3).
    """
    kappa = two_ac_level_offset(spin)
    arm_inner = math.floor((spin.two_j - 2 * kappa - 5) / 6)
    arm_cross = math.floor((kappa - 2) / 3)
    return min(arm_inner, arm_cross) + 1


def construct_two_ac_family(spin: SpinLabel) -> SubspaceFrame:
    """Generic 2-AC subspace for j >= 5: states with four +/-m support levels.

    Each state is (0_{3a}, alpha_a, 0_kappa, beta_a, 0_mid, beta_a, 0_kappa,
    alpha_a, 0_{3a}) with 2 alpha_a^2 + 2 beta_a^2 = 1 and the second-moment
    balance j(j+1) = 6 [(j-3a)^2 alpha_a^2 + (j-3a-1-kappa)^2 beta_a^2].
    """
    if spin.two_j < 10:
        raise ValueError("construction needs j >= 5")
    j = spin.j
    d = spin.dimension
    kappa = two_ac_level_offset(spin)
    k2 = two_ac_family_dimension(spin)
    target = j * (j + 1) / 6.0
    rows = []
    for a in range(k2):
        ma = j - 3 * a
        mb = j - 3 * a - 1 - kappa
        denom = mb * mb - ma * ma
        bsq = (target - ma * ma / 2.0) / denom
        asq = 0.5 - bsq
        if asq < -1e-12 or bsq < -1e-12:
            raise ArithmeticError(
                f"no real coefficients at a={a} for spin {spin}: "
                f"alpha^2={asq:.3e}, beta^2={bsq:.3e}"
            )
        alpha = math.sqrt(max(asq, 0.0))
        beta = math.sqrt(max(bsq, 0.0))
        v = np.zeros(d)
        p = 3 * a
        v[p] = alpha
        v[p + 1 + kappa] = beta
        v[d - 1 - p] = alpha
        v[d - 1 - (p + 1 + kappa)] = beta
        rows.append(v)
    return SubspaceFrame.from_amplitudes(spin, rows)


# ---------------------------------------------------------------------------
# Rotation equivalence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RotationEquivalence:
    equivalent: bool
    residual: float
    euler_angles: Tuple[float, float, float]


def rotation_equivalent(
    frame_a: SubspaceFrame,
    frame_b: SubspaceFrame,
    t: Optional[int] = None,
    starts: int = 24,
    seed: int = 7,
    tolerance: float = ROTATION_EQUIVALENCE_TOL,
) -> RotationEquivalence:
    """Test whether two frames span globally rotated copies of one subspace.

    Minimizes ||Pi_A - R(alpha,beta,gamma) Pi_B R^dag||_F over Euler angles
    with multi-start local optimization.  When `t` is given, both frames are
    required to certify at that order first.
    """
    if frame_a.spin != frame_b.spin or frame_a.k != frame_b.k:
        raise ValueError("frames must share spin and dimension")
    if t is not None:
        for f in (frame_a, frame_b):
            if not verify_subspace(f, t).verified:
                raise ValueError(f"frame does not certify at order t={t}")
    pa = frame_a.projector()
    pb = frame_b.projector()
    spin = frame_a.spin

    def residual(angles):
        r = rotation_operator_euler(spin, *angles)
        return float(np.linalg.norm(pa - r @ pb @ r.conj().T))

    rng = np.random.default_rng(seed)
    best_val = residual((0.0, 0.0, 0.0))
    best_angles = (0.0, 0.0, 0.0)
    for start in range(starts):
        if best_val <= tolerance / 100:
            break
        x0 = np.zeros(3) if start == 0 else rng.uniform(0.0, 2 * math.pi, size=3)
        res = minimize(
            residual, x0, method="Nelder-Mead",
            options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": 4000, "maxfev": 8000},
        )
        if res.fun < best_val:
            best_val = float(res.fun)
            best_angles = tuple(float(x) for x in res.x)
    return RotationEquivalence(best_val <= tolerance, best_val, best_angles)


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    frame: SubspaceFrame
    order_t: int
    note: str = ""


def _frame(two_j: int, rows) -> SubspaceFrame:
    return SubspaceFrame.from_amplitudes(SpinLabel(two_j), rows)


def spin2_plane() -> SubspaceFrame:
    """The unique (up to rotation) two-dimensional 1-AC subspace at spin 2."""
    r2i = math.sqrt(2) * 1j
    return _frame(4, [
        np.array([1, 0, r2i, 0, 1], dtype=complex) / 2,
        np.array([1, 0, -r2i, 0, 1], dtype=complex) / 2,
    ])


def spin2_plane_rotated_form() -> SubspaceFrame:
    """A real-amplitude frame spanning a rotated copy of the spin-2 plane."""
    s = math.sqrt
    return _frame(4, [
        np.array([1 / s(3), 0, 0, s(2 / 3), 0], dtype=complex),
        np.array([0, s(2 / 3), 0, 0, -1 / s(3)], dtype=complex),
    ])


def spin3_one_ac_triple() -> SubspaceFrame:
    """The first three-dimensional 1-AC subspace (spin 3)."""
    s = math.sqrt
    v1 = np.zeros(7); v1[0] = s(2 / 5); v1[5] = s(3 / 5)
    v2 = np.zeros(7); v2[1] = -s(3 / 5); v2[6] = s(2 / 5)
    v3 = np.zeros(7); v3[3] = 1.0
    return _frame(6, [v1, v2, v3])


def catalog() -> Dict[str, CatalogEntry]:
    """Named reference frames; every entry certifies at its declared order."""
    s = math.sqrt
    entries: List[CatalogEntry] = []

    entries.append(CatalogEntry("(2,2,1)", spin2_plane(), 1, "first 2-dim 1-AC plane"))
    entries.append(CatalogEntry(
        "(2,2,1)-rotated", spin2_plane_rotated_form(), 1,
        "rotated copy of (2,2,1) with real amplitudes",
    ))

    v1 = np.zeros(6); v1[0] = s(3); v1[4] = s(5)
    v2 = np.zeros(6); v2[1] = -s(5); v2[5] = s(3)
    entries.append(CatalogEntry("(5/2,2,1)-V1", _frame(5, [v1 / s(8), v2 / s(8)]), 1))

    al = s(20 - 5 * s(7)); be = s(10 * s(7) - 20); ga = s(16 - 5 * s(7))
    w1 = np.array([0, al, 0, -be, 0, ga]) / 4
    w2 = np.array([ga, 0, be, 0, al, 0]) / 4
    entries.append(CatalogEntry("(5/2,2,1)-V2", _frame(5, [w1, w2]), 1))

    entries.append(CatalogEntry("(3,3,1)", spin3_one_ac_triple(), 1, "first 3-dim 1-AC subspace"))

    zeta = math.atan(2 * s(7 / 5))
    u1 = np.zeros(10, complex); u1[3] = s(5 / 2) / 2; u1[7] = -s(3 / 2) / 2
    u2 = np.zeros(10, complex); u2[2] = -s(3 / 2) / 2; u2[6] = -s(5 / 2) / 2
    u3 = np.zeros(10, complex)
    u3[0] = s(11 / 2) / 4 * np.exp(1j * zeta); u3[4] = s(3) / 4; u3[8] = s(15 / 2) / 4
    u4 = np.zeros(10, complex)
    u4[1] = s(15 / 2) / 4; u4[5] = -s(3) / 4; u4[9] = s(11 / 2) / 4 * np.exp(1j * zeta)
    entries.append(CatalogEntry("(9/2,4,1)", _frame(9, [u1, u2, u3, u4]), 1,
                                "first 4-dim 1-AC subspace"))

    q1 = np.zeros(8); q1[0] = s(3 / 10); q1[5] = s(7 / 10)
    q2 = np.zeros(8); q2[2] = s(7 / 10); q2[7] = -s(3 / 10)
    entries.append(CatalogEntry("(7/2,2,2)", _frame(7, [q1, q2]), 2, "first 2-dim 2-AC subspace"))

    p1 = np.zeros(11); p1[0] = s(2 / 7); p1[7] = s(5 / 7)
    p2 = np.zeros(11); p2[3] = -s(5 / 7); p2[10] = s(2 / 7)
    entries.append(CatalogEntry("(5,2,2)", _frame(10, [p1, p2]), 2))

    # 16-digit amplitudes of the first 3-dim 2-AC subspace (spin 7)
    a = -0.4604769924899385 + 0.2090691916016556j
    b = 0.2215035777892046 - 0.4925631870366248j
    c = 0.3036273245094665 + 0.3014334601129537j
    dd = -0.1069092203207547 + 0.2403277996106323j
    e = -0.3180190622270446 - 0.3149505431871214j
    f = 0.4395729087324888 + 0.1474365706612073j
    g = 0.4058433985142867 + 0.1117167627487395j
    h = 0.4038887232746600 + 0.2292839547339512j
    x1 = np.array([0, 0, a, 0, 0, b, 0, 0, c, 0, 0, dd, 0, 0, e])
    x2 = np.array([e, 0, 0, dd, 0, 0, c, 0, 0, b, 0, 0, a, 0, 0])
    x3 = np.array([0, f, 0, 0, g, 0, 0, h, 0, 0, g, 0, 0, f, 0])
    entries.append(CatalogEntry("(7,3,2)", _frame(14, [x1, x2, x3]), 2,
                                "first 3-dim 2-AC subspace; decimal amplitudes"))

    return {entry.name: entry for entry in entries}
