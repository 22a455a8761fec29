import math

import numpy as np
import pytest
import scipy.linalg

from sbsim import model
from sbsim.errors import CapacityError
from sbsim.linalg import expm_hermitian, is_hermitian, kron_all
from sbsim.model import ModelConfig


def test_cinot_unitary_basic():
    u = model.cinot_unitary(0.0)
    cnot = np.eye(4)[:, [0, 1, 3, 2]]
    assert np.allclose(u, cnot)
    for theta in np.linspace(0.0, math.pi / 2, 7):
        u = model.cinot_unitary(theta)
        assert np.allclose(u @ u.conj().T, np.eye(4), atol=1e-12)
    with pytest.raises(ValueError):
        model.cinot_unitary(-0.1)


def test_cinot_hamiltonian_generates_gate():
    for theta in np.linspace(0.0, math.pi / 2, 50):
        h = model.cinot_hamiltonian(theta)
        assert is_hermitian(h)
        assert np.max(np.abs(expm_hermitian(h) - model.cinot_unitary(theta))) < 1e-10


def test_total_hamiltonian_structure():
    cfg = ModelConfig(theta=0.4, alpha1=0.3, alpha2=1.1, alpha3=0.7)
    h = model.total_hamiltonian_3q(cfg)
    assert is_hermitian(h)
    # Z-type couplings only: no coherence between the system's basis states
    assert np.max(np.abs(h[:4, 4:])) == 0.0
    # independent reconstruction term by term
    z, i2 = model.SIGMA_Z, model.IDENTITY_2
    h2gate = model.cinot_hamiltonian(cfg.theta)[2:, 2:]
    p1 = np.diag([0.0, 1.0])
    expected = (
        kron_all([p1, h2gate, i2])
        + kron_all([p1, i2, h2gate])
        + cfg.alpha1 * kron_all([z, i2, i2])
        + cfg.alpha2 * (kron_all([i2, z, i2]) + kron_all([i2, i2, z]))
        + cfg.alpha3
        * (
            kron_all([z, z, i2])
            + kron_all([z, i2, z])
            + kron_all([i2, z, z])
            + kron_all([z, z, z])
        )
    )
    assert np.max(np.abs(h - expected)) < 1e-12


def test_self_evolution_does_not_commute_with_gate_terms():
    # the generalized pointer basis question only exists because these
    # parts fail to commute
    gate = model._controlled_term(0.0, 2, 1) + model._controlled_term(0.0, 2, 2)
    rest = model._env_z(2, 1) + model._env_z(2, 2)
    comm = gate @ rest - rest @ gate
    assert np.max(np.abs(comm)) > 0.1


def test_central_hamiltonian_matches_3q_special_case():
    cfg = ModelConfig(theta=0.25, alpha2=0.8, n_env=2)
    got = model.central_hamiltonian_n(cfg)
    expected = model.total_hamiltonian_3q(cfg.replace(alpha1=0.0, alpha3=0.0))
    assert np.max(np.abs(got - expected)) < 1e-12


def test_ring_hamiltonian_two_qubits_doubles_single_pair():
    cfg = ModelConfig(alpha3=0.9, n_env=2)
    z, i2 = model.SIGMA_Z, model.IDENTITY_2
    expected = 2.0 * cfg.alpha3 * kron_all([i2, z, z])
    assert np.max(np.abs(model.ring_hamiltonian(cfg) - expected)) < 1e-12


def test_ring_hamiltonian_three_qubits():
    cfg = ModelConfig(alpha3=1.0, n_env=3)
    z, i2 = model.SIGMA_Z, model.IDENTITY_2
    expected = (
        kron_all([i2, z, z, i2])
        + kron_all([i2, i2, z, z])
        + kron_all([i2, z, i2, z])
    )
    assert np.max(np.abs(model.ring_hamiltonian(cfg) - expected)) < 1e-12
    with pytest.raises(ValueError):
        model.ring_hamiltonian(ModelConfig(n_env=1))


def test_initial_state(rng):
    cfg = ModelConfig(p=0.3, n_env=2)
    rho = model.initial_state(cfg)
    assert abs(np.trace(rho) - 1.0) < 1e-12
    assert np.linalg.eigvalsh(rho).min() > -1e-12
    plus = np.outer(model.KET_PLUS, model.KET_PLUS.conj())
    env = np.diag([0.3, 0.7])
    assert np.allclose(rho, kron_all([plus, env, env]))


def test_capacity_cap():
    with pytest.raises(CapacityError):
        model.initial_state(ModelConfig(n_env=12))
    with pytest.raises(CapacityError):
        model.central_hamiltonian_n(ModelConfig(n_env=12))


def test_config_validation():
    with pytest.raises(ValueError):
        ModelConfig(theta=2.0)
    with pytest.raises(ValueError):
        ModelConfig(p=0.6)
    with pytest.raises(ValueError):
        ModelConfig(alpha2=-0.1)
    with pytest.raises(ValueError):
        ModelConfig(n_env=0)
    with pytest.raises(ValueError):
        ModelConfig(n_env=4, observed=5)
    assert ModelConfig(n_env=4).observed == 3
    assert ModelConfig(n_env=1).observed == 1


def test_thermal_link_round_trip():
    link = model.thermal_link(alpha2=1.3, p=0.2)
    assert abs(model.mixedness_from_inv_beta(1.3, link.inv_beta) - 0.2) < 1e-12
    # maximal mixedness is infinite temperature
    assert model.thermal_link(1.0, 0.5).inv_beta == pytest.approx(0.0)
    with pytest.raises(ValueError):
        model.thermal_link(0.0, 0.2)
    with pytest.raises(ValueError):
        model.thermal_link(1.0, 0.0)


def test_thermal_state_is_gibbs_state_of_self_evolution():
    # inv_beta is defined so that it multiplies H directly in the Gibbs
    # weight; the round trip through mixedness_from_inv_beta fixes this
    # convention
    alpha2, p = 0.9, 0.15
    link = model.thermal_link(alpha2, p)
    h = alpha2 * model.SIGMA_Z
    gibbs = scipy.linalg.expm(-h * link.inv_beta)
    gibbs /= np.trace(gibbs)
    assert np.allclose(model.env_qubit_state(p), gibbs, atol=1e-12)
