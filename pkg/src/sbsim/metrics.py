"""Objectivity diagnostics of a joint system-fragment state.

The joint state lives on (system qubit) x (fragment); all block
extractions below are with respect to the system's computational basis.
The exact broadcast-structure distance is only available for qubit
fragments, where the candidate family has a 5-parameter Bloch
parametrization; larger fragments get the algebraic upper bound.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from . import optimize
from .errors import ConvergenceError
from .linalg import fidelity, trace_norm

ANGLE_TOL = 1e-9


@dataclass
class SbsCandidate:
    """A candidate broadcast state: weight p_tilde on the branch
    |psi> x env_state_0, the rest on the orthogonal complement."""

    p_tilde: float
    x_psi: float
    y_psi: float
    env_state_0: np.ndarray
    env_state_1: np.ndarray
    x_chi: float = 0.0
    y_chi: float = 0.0


@dataclass
class ObjectivityReport:
    gamma: float
    c0: float
    c1: float
    fid: float
    upper_bound: float
    mu: float | None = None
    nu: float | None = None
    sbs_distance: float | None = None
    optimal: SbsCandidate | None = None
    thermal_dist: float | None = None
    delta: float | None = None
    analytic: dict | None = None


def _split_blocks(rho_joint, fragment_dim):
    rho_joint = np.asarray(rho_joint, dtype=complex)
    if rho_joint.shape != (2 * fragment_dim, 2 * fragment_dim):
        raise ValueError(
            "joint state shape %s does not match fragment dim %d"
            % (rho_joint.shape, fragment_dim)
        )
    d = fragment_dim
    return (
        rho_joint[:d, :d],
        rho_joint[:d, d:],
        rho_joint[d:, d:],
    )


def decoherence_factor(rho_joint, fragment_dim):
    """Trace norm of the system's off-diagonal block, with the 1/2 branch
    weights divided out so a fully coherent |+> system gives exactly 1."""
    _, off, _ = _split_blocks(rho_joint, fragment_dim)
    return 2.0 * trace_norm(off)


def branch_split(rho_joint, fragment_dim):
    """(c0, c1, rho0, rho1): branch probabilities and normalized
    conditional fragment states."""
    b0, _, b1 = _split_blocks(rho_joint, fragment_dim)
    c0 = float(np.trace(b0).real)
    c1 = float(np.trace(b1).real)
    return c0, c1, b0 / c0, b1 / c1


def sbs_upper_bound(gamma, c0, c1, fid):
    """Algebraic upper bound on the trace-norm distance to the nearest
    broadcast-structure state."""
    return 2.0 * (gamma + math.sqrt(c0 * c1) * fid)


def bloch_angles(ket, tol=ANGLE_TOL):
    """Canonical Bloch angles (x, y) of a pure qubit state, x in [0, pi],
    y in [0, 2 pi); y = 0 at the poles where the phase is gauge."""
    a, b = complex(ket[0]), complex(ket[1])
    norm = math.hypot(abs(a), abs(b))
    a, b = a / norm, b / norm
    # rotate the global phase so the |0> amplitude is real nonnegative
    if abs(a) > tol:
        phase = a / abs(a)
    else:
        phase = b / abs(b)
    a, b = a / phase, b / phase
    x = 2.0 * math.atan2(abs(b), a.real)
    if x < tol or x > math.pi - tol:
        return (0.0 if x < tol else math.pi), 0.0
    y = math.atan2(b.imag, b.real) % (2.0 * math.pi)
    return x, y


def ket_from_angles(x, y):
    return np.array(
        [math.cos(0.5 * x), math.sin(0.5 * x) * np.exp(1j * y)], dtype=complex
    )


def _perp(ket):
    return np.array([ket[1].conjugate(), -ket[0].conjugate()], dtype=complex)


def _sigmoid(z):
    # overflow-safe: exp only ever sees a non-positive argument
    if z >= 0.0:
        return 1.0 / (1.0 + math.exp(-z))
    e = math.exp(z)
    return e / (1.0 + e)


def _candidate_from_params(params, pmap):
    xp, yp, xc, yc, z = params
    s = _sigmoid(z)
    p_tilde = 0.5 + 0.5 * s if pmap == optimize.PMAP_HALF else s
    psi = ket_from_angles(*bloch_angles(ket_from_angles(xp, yp)))
    x_psi, y_psi = bloch_angles(psi)
    chi = ket_from_angles(*bloch_angles(ket_from_angles(xc, yc)))
    x_chi, y_chi = bloch_angles(chi)
    chi_perp = _perp(chi)
    return SbsCandidate(
        p_tilde=p_tilde,
        x_psi=x_psi,
        y_psi=y_psi,
        env_state_0=np.outer(chi, chi.conj()),
        env_state_1=np.outer(chi_perp, chi_perp.conj()),
        x_chi=x_chi,
        y_chi=y_chi,
    )


def optimize_sbs_distance(rho_joint, starts=None):
    """Minimal trace-norm distance from a qubit-qubit state to the
    broadcast-structure family, and the optimal candidate."""
    rho_joint = np.ascontiguousarray(rho_joint, dtype=complex)
    if rho_joint.shape != (4, 4):
        raise ValueError("exact minimization supports qubit fragments only")
    if starts is None:
        starts = optimize.default_starts()
    best, all_ok = optimize.multistart(rho_joint, starts, optimize.PMAP_HALF)
    if best is None or not np.isfinite(best.fun):
        raise ConvergenceError("no start produced a finite minimum", best)
    cand = _candidate_from_params(best.x, optimize.PMAP_HALF)
    return float(best.fun), cand


def fixed_basis_distance(rho_joint, psi):
    """Minimal distance with the system basis frozen at the pure state psi
    (weight ranges over the full [0, 1] here)."""
    rho_joint = np.ascontiguousarray(rho_joint, dtype=complex)
    if rho_joint.shape != (4, 4):
        raise ValueError("exact minimization supports qubit fragments only")
    x_psi, y_psi = bloch_angles(np.asarray(psi, dtype=complex))
    starts = optimize.fixed_psi_starts(x_psi, y_psi)
    free = np.array([False, False, True, True, True])
    best, _ = optimize.multistart(
        rho_joint, starts, optimize.PMAP_FULL, free=free
    )
    if best is None or not np.isfinite(best.fun):
        raise ConvergenceError("no start produced a finite minimum", best)
    return float(best.fun)


KET_0 = np.array([1.0, 0.0], dtype=complex)
KET_PLUS = np.array([1.0, 1.0], dtype=complex) / math.sqrt(2.0)


def basis_delta(rho_joint):
    """Hadamard-basis distance minus computational-basis distance; positive
    means the computational basis is the better broadcast basis."""
    return fixed_basis_distance(rho_joint, KET_PLUS) - fixed_basis_distance(
        rho_joint, KET_0
    )


def thermal_dist_qubit(c0, c1, rho0, rho1):
    """Trace distance of the average fragment qubit from the nearest
    diagonal (thermal) state: the norm of its off-diagonal part."""
    avg = c0 * rho0 + c1 * rho1
    return 2.0 * abs(avg[0, 1])


def report(rho_joint, compute_distance=None, compute_delta=False, starts=None):
    """Aggregate all diagnostics computable for the given fragment size.

    compute_distance defaults to True exactly when the fragment is a
    single qubit; the exact minimization does not exist for larger ones.
    """
    rho_joint = np.asarray(rho_joint, dtype=complex)
    fragment_dim = rho_joint.shape[0] // 2
    gamma = decoherence_factor(rho_joint, fragment_dim)
    c0, c1, rho0, rho1 = branch_split(rho_joint, fragment_dim)
    fid = fidelity(rho0, rho1)
    rep = ObjectivityReport(
        gamma=gamma,
        c0=c0,
        c1=c1,
        fid=fid,
        upper_bound=sbs_upper_bound(gamma, c0, c1, fid),
    )
    if fragment_dim == 2:
        from .linalg import sqrtm_psd

        s = sqrtm_psd(rho0)
        w = np.linalg.eigvalsh(s @ rho1 @ s)
        rep.mu = float((w[0] + w[1]) / 2.0)
        rep.nu = float((w[1] - w[0]) / 2.0)
        rep.thermal_dist = thermal_dist_qubit(c0, c1, rho0, rho1)
        if compute_distance is None:
            compute_distance = True
    if compute_distance:
        dist, cand = optimize_sbs_distance(rho_joint, starts=starts)
        rep.sbs_distance = dist
        rep.optimal = cand
    if compute_delta:
        rep.delta = basis_delta(rho_joint)
    return rep
