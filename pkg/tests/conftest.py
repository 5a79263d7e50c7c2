import numpy as np
import pytest

from relsub.dirac import build_gamma_spinor
from relsub.dkp import build_beta_spin0, build_beta_spin1
from relsub.suites import draw_momentum


@pytest.fixture(scope="session")
def gamma():
    return build_gamma_spinor()


@pytest.fixture(scope="session")
def beta0():
    return build_beta_spin0()


@pytest.fixture(scope="session")
def beta1():
    return build_beta_spin1()


def onshell_momenta(seed, count):
    """Deterministic stream of (momentum, mass) pairs for property loops."""
    rng = np.random.default_rng(seed)
    return [draw_momentum(rng) for _ in range(count)]
