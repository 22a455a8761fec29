"""Imperfect-broadcast qubit model: decoherence, orthogonalization and
distance to the nearest spectrum broadcast structure."""

__version__ = "0.1.0"

from .model import ModelConfig, ThermalLink, thermal_link
# note: the evolve *function* stays at sbsim.evolve.evolve; re-exporting it
# here would shadow the submodule of the same name
from .evolve import observed_joint_state, pipeline, central_report
from .metrics import (
    ObjectivityReport,
    SbsCandidate,
    basis_delta,
    decoherence_factor,
    fixed_basis_distance,
    optimize_sbs_distance,
    report,
    sbs_upper_bound,
)
from .sweep import Axis, SweepSpec, marginal_slice, run_sweep, summarize
from .kernels import BACKEND as KERNEL_BACKEND

__all__ = [
    "ModelConfig",
    "ThermalLink",
    "thermal_link",
    "observed_joint_state",
    "pipeline",
    "central_report",
    "ObjectivityReport",
    "SbsCandidate",
    "basis_delta",
    "decoherence_factor",
    "fixed_basis_distance",
    "optimize_sbs_distance",
    "report",
    "sbs_upper_bound",
    "Axis",
    "SweepSpec",
    "marginal_slice",
    "run_sweep",
    "summarize",
    "KERNEL_BACKEND",
]
