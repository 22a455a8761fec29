"""Closed-form objectivity parameters of the three-qubit model.

Everything here follows from the block decomposition of the total
Hamiltonian in the system qubit's computational basis: the system-|0>
block is diagonal with entries xi_1, xi_2, xi_2, xi_3 (after removing a
global (pi - alpha1) shift), and the system-|1> block M1 has a closed
eigendecomposition in terms of x = pi cos(theta) and
y = pi sin(theta) - 2 alpha2 + 2 alpha3.  These formulas are the ground
truth the numerical engine is validated against.
"""
import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericError, SingularBlockError
from .model import env_qubit_state

W_SINGULAR_TOL = 1e-8
RADICAND_TOL = 1e-10


@dataclass(frozen=True)
class SpectralParams:
    xi1: float
    xi2: float
    xi3: float
    x: float
    y: float
    w: float
    u1: complex
    u2: complex
    u3: complex


@dataclass(frozen=True)
class VBlockEntries:
    r1: float
    r2: float
    r3: float
    r4: float
    q1: float
    q2: float


def spectral_params(cfg):
    """Eigenvalue parameters of the two Hamiltonian blocks."""
    if cfg.n_env != 2:
        raise ValueError("closed forms are for the three-qubit model (n_env = 2)")
    xi1 = -math.pi + 2 * cfg.alpha1 + 2 * cfg.alpha2 + 4 * cfg.alpha3
    xi2 = -math.pi + 2 * cfg.alpha1 - 2 * cfg.alpha3
    xi3 = -math.pi + 2 * cfg.alpha1 - 2 * cfg.alpha2
    x = math.pi * math.cos(cfg.theta)
    y = math.pi * math.sin(cfg.theta) - 2 * cfg.alpha2 + 2 * cfg.alpha3
    w = math.hypot(x, y)
    if w < W_SINGULAR_TOL:
        raise SingularBlockError(
            "w = %g: closed forms divide by w^2; use the numerical engine" % w
        )
    t = cfg.t
    return SpectralParams(
        xi1=xi1, xi2=xi2, xi3=xi3, x=x, y=y, w=w,
        u1=cmath.exp(-1j * t * xi1),
        u2=cmath.exp(-1j * t * xi2),
        u3=cmath.exp(-1j * t * xi3),
    )


def m0_matrix(cfg):
    sp = spectral_params(cfg)
    return np.diag([sp.xi1, sp.xi2, sp.xi2, sp.xi3]).astype(complex)


def m1_matrix(cfg):
    sp = spectral_params(cfg)
    x, y = sp.x, sp.y
    return np.array(
        [
            [-y, -x / 2, -x / 2, 0],
            [-x / 2, 0, 0, -x / 2],
            [-x / 2, 0, 0, -x / 2],
            [0, -x / 2, -x / 2, y],
        ],
        dtype=complex,
    )


def v_block_entries(cfg):
    """Real and imaginary entry values of the system-|1> propagator block."""
    sp = spectral_params(cfg)
    x, y, w, t = sp.x, sp.y, sp.w, cfg.t
    c = math.cos(t * w)
    w2 = w * w
    r1 = 0.5 * (x * x + (w2 + y * y) * c) / w2
    r2 = -0.5 * x * y * (1 - c) / w2
    r3 = -0.5 * x * x * (1 - c) / w2
    r4 = 0.5 * (x * x * c + w2 + y * y) / w2
    q1 = -y * math.sin(t * w) / w
    q2 = 0.5 * x * math.sin(t * w) / w
    return VBlockEntries(r1=r1, r2=r2, r3=r3, r4=r4, q1=q1, q2=q2)


def v_blocks(cfg):
    """(entries, V0, V1): both 4x4 propagator blocks at time cfg.t."""
    sp = spectral_params(cfg)
    e = v_block_entries(cfg)
    v0 = np.diag([sp.u1, sp.u2, sp.u2, sp.u3])
    r = np.array(
        [
            [e.r1, e.r2, e.r2, e.r3],
            [e.r2, e.r4, e.r3, -e.r2],
            [e.r2, e.r3, e.r4, -e.r2],
            [e.r3, -e.r2, -e.r2, e.r1],
        ]
    )
    q = np.array(
        [
            [-e.q1, e.q2, e.q2, 0],
            [e.q2, 0, 0, e.q2],
            [e.q2, 0, 0, e.q2],
            [0, e.q2, e.q2, e.q1],
        ]
    )
    return e, v0, (r + 1j * q).astype(complex)


def _sqrt_clamped(value, what):
    if value < -RADICAND_TOL:
        raise NumericError("%s radicand %g below -%g" % (what, value, RADICAND_TOL))
    return math.sqrt(max(value, 0.0))


def gamma_closed(cfg):
    """Decoherence factor of the observed qubit pair."""
    sp = spectral_params(cfg)
    e = v_block_entries(cfg)
    p = cfg.p
    s1 = (p * p + (1 - p) * (1 - p)) * e.r4
    s2 = p * (1 - p) * ((e.r1 + 1j * e.q1) * e.r4 - (e.r2 - 1j * e.q2) ** 2)
    term0 = _sqrt_clamped(s1 + 2 * (sp.u1 * sp.u2.conjugate() * s2).real, "gamma")
    term1 = _sqrt_clamped(s1 + 2 * (sp.u2 * sp.u3.conjugate() * s2).real, "gamma")
    return p * term0 + (1 - p) * term1


def conditional_states(cfg):
    """States of the observed environment qubit conditioned on the system
    being |0> or |1> in the computational basis."""
    e = v_block_entries(cfg)
    p = cfg.p
    rho0 = env_qubit_state(p)
    off = (1 - 2 * p) * (e.r2 + 1j * e.q2)
    rho1 = np.array(
        [
            [1 + p * (2 * e.r4 - 1) - e.r4, off],
            [off.conjugate(), p * (1 - 2 * e.r4) + e.r4],
        ],
        dtype=complex,
    )
    return rho0, rho1


def fidelity_closed(cfg):
    """(mu, nu, F): overlap of the conditional qubit states in closed form."""
    e = v_block_entries(cfg)
    p = cfg.p
    mu = -p * (1 - p) * (2 * e.r4 - 1) + 0.5 * e.r4
    nu = 0.5 * abs(1 - 2 * p) * _sqrt_clamped(
        e.r4 * (e.r4 - 4 * (p - p * p) * (e.r4 - 1)), "nu"
    )
    f = _sqrt_clamped(mu + nu, "fidelity") + _sqrt_clamped(mu - nu, "fidelity")
    return mu, nu, f


def thermal_distance(cfg):
    """Trace distance of the average environment qubit state from the
    nearest thermal (diagonal, ground-state-heavy) state."""
    e = v_block_entries(cfg)
    return abs(1 - 2 * cfg.p) * _sqrt_clamped(-e.r4 * e.r4 + e.r4, "thermal distance")


def thermal_distance_trig(cfg):
    """Same quantity written directly in the trigonometric variables; used
    to cross-check thermal_distance."""
    sp = spectral_params(cfg)
    x, y, t = sp.x, sp.y, cfg.t
    c = math.cos(t * math.hypot(x, y))
    return (
        abs(0.5 - cfg.p)
        * x
        * math.sqrt(max(1 - c, 0.0))
        * math.sqrt((1 + c) * x * x + 2 * y * y)
        / (x * x + y * y)
    )


def branch_probabilities(cfg):
    """Populations of the system's computational-basis states; constant 1/2
    in this model.  Computed from the propagator blocks rather than assumed."""
    _, v0, v1 = v_blocks(cfg)
    env = env_qubit_state(cfg.p)
    e = np.kron(env, env)
    c0 = 0.5 * np.trace(v0 @ e @ v0.conj().T).real
    c1 = 0.5 * np.trace(v1 @ e @ v1.conj().T).real
    return c0, c1
