import math

import numpy as np
import pytest

from sbsim.model import ModelConfig


def random_density(rng, dim):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_config(rng, **fixed):
    kw = dict(
        theta=rng.uniform(0.0, math.pi / 2),
        alpha1=rng.uniform(0.0, 3.0),
        alpha2=rng.uniform(0.0, 3.0),
        alpha3=rng.uniform(0.0, 3.0),
        p=rng.uniform(0.0, 0.5),
        t=rng.uniform(0.1, 3.0),
    )
    kw.update(fixed)
    return ModelConfig(**kw)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
