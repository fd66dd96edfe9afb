import math

import numpy as np
import pytest

from nclab import _kernels_py
from nclab.figures import FIGURES, computed_constants
from nclab.gaussian_core import GaussianParams

try:
    from nclab import _kernels as _compiled
except ImportError:
    _compiled = None

ACCEPTANCE_LINES = []


def pytest_sessionstart(session):
    # Figure outputs are checked against the reported constants before anything else runs.
    bad = []
    for number, fig in FIGURES.items():
        got = computed_constants(fig)
        for key, want in fig.reported.items():
            if not abs(got[key] - want) <= fig.tolerance[key]:
                bad.append(f"figure {number} {key}: {got[key]!r} vs {want}")
    if bad:
        raise pytest.UsageError("figure goldens failed:\n" + "\n".join(bad))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def weak():
    return GaussianParams.amplitude_quadrature(0.1, 0.1, 0.0)


@pytest.fixture
def bright():
    return GaussianParams.amplitude_quadrature(0.1, 0.1, 2.0)


@pytest.fixture
def hot():
    return GaussianParams.amplitude_quadrature(1.0, 0.1, 0.0)


BACKENDS = [pytest.param(_kernels_py, id="python")]
if _compiled is not None:
    BACKENDS.append(pytest.param(_compiled, id="compiled"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def random_params(rng, nbar_max=1.0, r_range=(0.05, 0.3), alpha_max=2.0):
    """A generic parameter draw with independent squeeze and coherent phases."""
    return GaussianParams(
        nbar=rng.uniform(0.0, nbar_max),
        r=rng.uniform(*r_range),
        theta=rng.uniform(0.0, 2 * math.pi),
        alpha_mag=rng.uniform(0.0, alpha_max),
        phi=rng.uniform(0.0, 2 * math.pi),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20161)
