"""Rotation metrology with mixed spin states.

Spin operator algebra, multipole expansions, quantum Fisher information and
averaged Cramer-Rao bounds, anticoherence measures, anticoherent-subspace
search and construction, rotosensor certification, and entanglement
negativity across symmetric-qubit bipartitions.
"""

from .spin_core import (
    AxisAngle,
    DensityMatrix,
    EigenMixture,
    PureState,
    SpinLabel,
    angular_momentum_operators,
    clebsch_gordan,
    component_along,
    eigen_mixture,
    rotation_operator,
    rotation_operator_euler,
)
from .multipole import MultipoleExpansion, MultipoleIndex, expand, multipole_operator, reconstruct
from .metrology import (
    CrbReport,
    QfiQuadraticForm,
    averaged_inverse_qfi,
    averaged_qfi,
    crb_report,
    fidelity_taylor_check,
    fixed_axis_optimum,
    qfi,
    qfi_quadratic_form,
    uhlmann_fidelity,
)
from .anticoherence import (
    AnticoherenceReport,
    anticoherence_measure,
    anticoherence_report,
    is_anticoherent,
    perturbed_anticoherent_state,
    reduced_state,
    spin32_two_ac_family,
)
from .subspaces import (
    SearchConfig,
    SubspaceCertificate,
    SubspaceFrame,
    catalog,
    construct_one_ac_family,
    construct_two_ac_family,
    kmax_scan,
    objective_g_lm,
    objective_g_t,
    rotation_equivalent,
    search_subspace,
    upper_bound_kmax,
    verify_subspace,
)
from .entanglement import Bipartition, NegativityReport, embed_bipartite, negativity, schmidt_spectrum, protected_negativity_suite
from .oqr import OqrVerdict, certify, pure_coherent_superposition_a2, qcrb_floor, spin2_family, spin3_oqr_family

__version__ = "0.1.0"

__all__ = [
    "AxisAngle", "DensityMatrix", "EigenMixture", "PureState", "SpinLabel",
    "angular_momentum_operators", "clebsch_gordan", "component_along",
    "eigen_mixture", "rotation_operator", "rotation_operator_euler",
    "MultipoleExpansion", "MultipoleIndex", "expand", "multipole_operator", "reconstruct",
    "CrbReport", "QfiQuadraticForm", "averaged_inverse_qfi", "averaged_qfi",
    "crb_report", "fidelity_taylor_check", "fixed_axis_optimum", "qfi",
    "qfi_quadratic_form", "uhlmann_fidelity",
    "AnticoherenceReport", "anticoherence_measure", "anticoherence_report",
    "is_anticoherent", "perturbed_anticoherent_state", "reduced_state",
    "spin32_two_ac_family",
    "SearchConfig", "SubspaceCertificate", "SubspaceFrame", "catalog",
    "construct_one_ac_family", "construct_two_ac_family", "kmax_scan",
    "objective_g_lm", "objective_g_t", "rotation_equivalent", "search_subspace",
    "upper_bound_kmax", "verify_subspace",
    "Bipartition", "NegativityReport", "embed_bipartite", "negativity",
    "schmidt_spectrum", "protected_negativity_suite",
    "OqrVerdict", "certify", "pure_coherent_superposition_a2", "qcrb_floor",
    "spin2_family", "spin3_oqr_family",
]
