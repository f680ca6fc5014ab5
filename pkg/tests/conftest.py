import os
import random

import pytest
from hypothesis import HealthCheck, settings

from qupauli import PauliElement

SEED = int(os.environ.get("QUPAULI_SEED", "20240601"))

settings.register_profile("default", derandomize=True, max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# filled in by test_acceptance.py, reported once at the end of the run
ACCEPTANCE = {}


@pytest.fixture
def rng():
    return random.Random(SEED)


def X(d, a=1, n=1, q=0):
    x = [0] * n
    x[q] = a
    return PauliElement.make(d, n, 0, x, [0] * n)


def Z(d, b=1, n=1, q=0):
    z = [0] * n
    z[q] = b
    return PauliElement.make(d, n, 0, [0] * n, z)


def W(d, j=1, n=1):
    return PauliElement.phase_only(d, n, j)


def random_pauli(rng, d, n, phase=True):
    vec = [rng.randrange(d) for _ in range(2 * n)]
    return PauliElement.from_vector(d, vec, rng.randrange(d) if phase else 0)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, note = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key:2d}: {'PASS' if ok else 'FAIL'}  {note}")
