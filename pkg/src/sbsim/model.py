"""Gates, Hamiltonians and initial states of the imperfect-broadcast model.

The register layout is fixed: the observed system is tensor factor 0,
environment qubits are factors 1..n_env.  All couplings are Z-type, so
every builder returns a Hermitian operator that is block diagonal in the
system qubit's computational basis.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError
from .linalg import kron_all

MAX_QUBITS = 12  # dense-method capacity cap (4096-dim)

SIGMA_Z = np.diag([1.0, -1.0]).astype(complex)
IDENTITY_2 = np.eye(2, dtype=complex)
PROJ_1 = np.diag([0.0, 1.0]).astype(complex)
KET_PLUS = np.array([1.0, 1.0], dtype=complex) / math.sqrt(2.0)


@dataclass(frozen=True)
class ModelConfig:
    """Physical parameters of one model instance.

    theta      gate imperfection angle, [0, pi/2]; 0 is a perfect C-NOT
    alpha1..3  strengths of system self-evolution, environment
               self-evolution and inter-qubit interaction
    p          initial environment mixedness, [0, 0.5]
    t          evolution time (the gate completes at t = 1)
    n_env      number of environment qubits
    observed   environment qubits kept as the fragment; the remaining
               highest-index qubits are traced out
    """

    theta: float = 0.0
    alpha1: float = 0.0
    alpha2: float = 0.0
    alpha3: float = 0.0
    p: float = 0.0
    t: float = 1.0
    n_env: int = 2
    observed: int = field(default=-1)

    def __post_init__(self):
        if self.observed == -1:
            object.__setattr__(self, "observed", self.n_env - 1 if self.n_env > 1 else 1)
        if not 0.0 <= self.theta <= math.pi / 2 + 1e-12:
            raise ValueError("theta must lie in [0, pi/2], got %r" % (self.theta,))
        if not 0.0 <= self.p <= 0.5:
            raise ValueError("p must lie in [0, 0.5], got %r" % (self.p,))
        for name in ("alpha1", "alpha2", "alpha3"):
            if getattr(self, name) < 0.0:
                raise ValueError("%s must be >= 0" % name)
        if self.n_env < 1:
            raise ValueError("n_env must be >= 1")
        if not 1 <= self.observed <= self.n_env:
            raise ValueError("observed must lie in [1, n_env]")

    def replace(self, **kw):
        from dataclasses import replace

        if "n_env" in kw and "observed" not in kw:
            kw["observed"] = -1  # re-derive the default for the new size
        return replace(self, **kw)


@dataclass(frozen=True)
class ThermalLink:
    """Relation between environment mixedness and temperature for the
    self-evolution Hamiltonian (|1> is the ground state of sigma_Z)."""

    alpha2: float
    p: float
    inv_beta: float


def cinot_unitary(theta):
    """The 4x4 controlled imperfect-NOT gate."""
    if not 0.0 <= theta <= math.pi / 2 + 1e-12:
        raise ValueError("theta must lie in [0, pi/2]")
    s, c = math.sin(theta), math.cos(theta)
    u = np.eye(4, dtype=complex)
    u[2:, 2:] = [[s, c], [c, -s]]
    return u


def cinot_hamiltonian(theta):
    """A generator of the C-INOT gate: exp(-i H) equals cinot_unitary(theta).

    Only the target block conditioned on the control being |1> is nonzero.
    """
    if not 0.0 <= theta <= math.pi / 2 + 1e-12:
        raise ValueError("theta must lie in [0, pi/2]")
    s, c = math.sin(theta), math.cos(theta)
    h = np.zeros((4, 4), dtype=complex)
    h[2:, 2:] = [
        [(math.pi / 2) * (1 - s), -(math.pi / 2) * c],
        [-(math.pi / 2) * c, (math.pi / 2) * (1 + s)],
    ]
    return h


def _controlled_term(theta, n_env, target):
    """C-INOT generator with the system as control and environment qubit
    `target` (1-based) as target, embedded in the full register."""
    h2 = cinot_hamiltonian(theta)[2:, 2:]
    factors = [PROJ_1] + [IDENTITY_2] * n_env
    factors[target] = h2
    return kron_all(factors)


def _env_z(n_env, which):
    """sigma_Z on environment qubit `which` (1-based), identity elsewhere."""
    factors = [IDENTITY_2] * (n_env + 1)
    factors[which] = SIGMA_Z
    return kron_all(factors)


def total_hamiltonian_3q(cfg):
    """Full 8x8 Hamiltonian of the three-qubit model: two C-INOT terms plus
    system self-evolution (alpha1), environment self-evolution (alpha2) and
    the pairwise + three-body Z interactions (alpha3)."""
    if cfg.n_env != 2:
        raise ValueError("three-qubit model needs n_env = 2, got %d" % cfg.n_env)
    z, i2 = SIGMA_Z, IDENTITY_2
    h1 = kron_all([z, i2, i2])
    h2 = kron_all([i2, z, i2]) + kron_all([i2, i2, z])
    h3 = (
        kron_all([z, z, i2])
        + kron_all([z, i2, z])
        + kron_all([i2, z, z])
        + kron_all([z, z, z])
    )
    h = _controlled_term(cfg.theta, 2, 1) + _controlled_term(cfg.theta, 2, 2)
    return h + cfg.alpha1 * h1 + cfg.alpha2 * h2 + cfg.alpha3 * h3


def central_hamiltonian_n(cfg):
    """Sum of C-INOT generators from the system to every environment qubit,
    plus alpha2 times the environment self-evolution."""
    if 1 + cfg.n_env > MAX_QUBITS:
        raise CapacityError("register of %d qubits exceeds cap %d" % (1 + cfg.n_env, MAX_QUBITS))
    dim = 2 ** (1 + cfg.n_env)
    h = np.zeros((dim, dim), dtype=complex)
    for i in range(1, cfg.n_env + 1):
        h += _controlled_term(cfg.theta, cfg.n_env, i)
        h += cfg.alpha2 * _env_z(cfg.n_env, i)
    return h


def ring_hamiltonian(cfg):
    """alpha3 times the neighbour-neighbour ZZ ring over the environment
    qubits (closed ring; for n_env = 2 both terms coincide, doubling the
    single ZZ pair)."""
    if cfg.n_env < 2:
        raise ValueError("ring interaction needs n_env >= 2")
    if 1 + cfg.n_env > MAX_QUBITS:
        raise CapacityError("register of %d qubits exceeds cap %d" % (1 + cfg.n_env, MAX_QUBITS))
    dim = 2 ** (1 + cfg.n_env)
    h = np.zeros((dim, dim), dtype=complex)
    for i in range(1, cfg.n_env + 1):
        j = i % cfg.n_env + 1
        factors = [IDENTITY_2] * (cfg.n_env + 1)
        factors[i] = SIGMA_Z
        factors[j] = factors[j] @ SIGMA_Z
        h += cfg.alpha3 * kron_all(factors)
    return h


def env_qubit_state(p):
    """p|0><0| + (1-p)|1><1| -- note p = 0 puts all weight on |1>."""
    return np.diag([p, 1.0 - p]).astype(complex)


def initial_state(cfg):
    """|+><+| on the system, product of identical mixed qubits on the
    environment."""
    if 1 + cfg.n_env > MAX_QUBITS:
        raise CapacityError("register of %d qubits exceeds cap %d" % (1 + cfg.n_env, MAX_QUBITS))
    plus = np.outer(KET_PLUS, KET_PLUS.conj())
    return kron_all([plus] + [env_qubit_state(cfg.p)] * cfg.n_env)


def thermal_link(alpha2, p):
    """1/beta such that the environment qubit state is thermal for the
    alpha2 self-evolution; round-trips to p via mixedness_from_inv_beta."""
    if alpha2 <= 0.0:
        raise ValueError("inverse temperature undefined for alpha2 = 0")
    if p <= 0.0:
        raise ValueError("inverse temperature diverges at p = 0")
    if p > 0.5:
        raise ValueError("p must lie in (0, 0.5]")
    inv_beta = math.log((1.0 - p) / p) / (2.0 * alpha2)
    return ThermalLink(alpha2=alpha2, p=p, inv_beta=inv_beta)


def mixedness_from_inv_beta(alpha2, inv_beta):
    """Inverse of thermal_link: p = e^{-x} / (e^{-x} + e^{x}) with
    x = alpha2 / beta = alpha2 * inv_beta."""
    e_minus = math.exp(-alpha2 * inv_beta)
    e_plus = math.exp(alpha2 * inv_beta)
    return e_minus / (e_minus + e_plus)
