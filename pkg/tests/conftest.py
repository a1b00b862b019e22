from fractions import Fraction

import numpy as np
import pytest

from sl2orbits.algebra import LieVector, exp

A = np.array([[0.0, 1.0], [1.0, 0.0]])
B = np.array([[1.0, 0.0], [0.0, -1.0]])
C = np.array([[0.0, 1.0], [-1.0, 0.0]])


def mat_of(h) -> np.ndarray:
    """Independent oracle: xA + yB + zC as a numpy matrix."""
    x, y, z = h
    return x * A + y * B + z * C


def coords_of(m) -> np.ndarray:
    """Solve m = xA + yB + zC by least squares on the 4 entries."""
    basis = np.column_stack([A.ravel(), B.ravel(), C.ravel()])
    sol, *_ = np.linalg.lstsq(basis, np.asarray(m, dtype=float).ravel(), rcond=None)
    return sol


def commutator_oracle(u, v) -> np.ndarray:
    mu, mv = mat_of(u), mat_of(v)
    return coords_of(mu @ mv - mv @ mu)


def ad_oracle(h) -> np.ndarray:
    return np.column_stack([commutator_oracle(h, e) for e in np.eye(3)])


def killing_oracle(u, v) -> float:
    return float(np.trace(ad_oracle(u) @ ad_oracle(v)))


def series_exp(h, terms: int = 50) -> np.ndarray:
    m = mat_of(h)
    out = np.eye(2)
    term = np.eye(2)
    for k in range(1, terms):
        term = term @ m / k
        out = out + term
    return out


def exact_det(m) -> float:
    """Determinant of the stored floats in exact rational arithmetic."""
    a, b, c, d = (Fraction(float(v)) for v in m)
    return float(a * d - b * c)


def random_lie(rng, radius: float = 1.0) -> LieVector:
    v = rng.normal(size=3)
    v *= radius * rng.random() ** (1.0 / 3.0) / np.linalg.norm(v)
    return LieVector(*map(float, v))


def random_group(rng, radius: float = 2.0):
    return exp(random_lie(rng, radius))


@pytest.fixture
def rng():
    return np.random.default_rng(20241015)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
