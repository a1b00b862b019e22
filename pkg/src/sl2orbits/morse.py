"""Gradient flow of f(x, y, z) = yz on the one-sheeted orbit.

The gradient (0, z, y) is linear, tangent to every level set of
x^2 + y^2 - z^2, and its (y, z) part has eigenvalues -1 and 1 with
eigenvectors (-1, 1) and (1, 1):

    (y, z)(t) = c1 e^-t (-1, 1) + c2 e^t (1, 1).

A trajectory converges forward only if c2 = 0 and backward only if c1 = 0;
otherwise it leaves every compact set in finite-looking exponential time,
which is the failure of the compact Morse-Smale picture on this orbit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import LieVector, ad
from .errors import NonPositiveLambda, NotCritical, NotOnSurface, StepTooLarge

HESSIAN = np.array([[0.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
ESCAPE_RADIUS = 1e6
MAX_TIME = 50.0
MAX_STEP = 0.1
ON_SURFACE_TOL = 1e-8
CRITICAL_TOL = 1e-8
LIMIT_ZERO_TOL = 1e-12


@dataclass(frozen=True)
class ConvergesTo:
    point: tuple[float, float, float]

    @property
    def tag(self) -> str:
        return "converges_to"


@dataclass(frozen=True)
class Escapes:
    @property
    def tag(self) -> str:
        return "escapes"


LimitTag = ConvergesTo | Escapes


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray  # strictly increasing
    points: np.ndarray  # shape (n, 3)
    limit_forward: LimitTag
    limit_backward: LimitTag
    escaped: bool = False

    def __len__(self) -> int:
        return len(self.times)

    @property
    def samples(self) -> list[tuple[float, np.ndarray]]:
        return list(zip(self.times.tolist(), self.points))


@dataclass(frozen=True)
class MorseData:
    point: np.ndarray
    restricted_hessian: np.ndarray
    nondegenerate: bool
    index: int


def _xyz(p) -> tuple[float, float, float]:
    x, y, z = p
    return float(x), float(y), float(z)


def grad_f(p) -> np.ndarray:
    _, y, z = _xyz(p)
    return np.array([0.0, z, y])


def _orbit_residual(p, lam: float) -> float:
    x, y, z = _xyz(p)
    return x * x + y * y - z * z - lam * lam


def _require_on_orbit(p, lam: float) -> None:
    x, y, z = _xyz(p)
    tol = ON_SURFACE_TOL * max(1.0, lam * lam, x * x + y * y + z * z)
    if abs(_orbit_residual(p, lam)) > tol:
        raise NotOnSurface(f"{(x, y, z)} is not on x^2+y^2-z^2 = {lam * lam!r}")


def tangency_residual(p, lam: float) -> float:
    """<grad f(p), grad q(p)> with q = x^2 + y^2 - z^2; zero means tangent."""
    _require_on_orbit(p, lam)
    x, y, z = _xyz(p)
    g = grad_f(p)
    return float(2.0 * x * g[0] + 2.0 * y * g[1] - 2.0 * z * g[2])


def critical_points(lam: float) -> list[np.ndarray]:
    if not lam > 0:
        raise NonPositiveLambda(f"lambda must be > 0, got {lam!r}")
    return [np.array([lam, 0.0, 0.0]), np.array([-lam, 0.0, 0.0])]


def tangent_basis(p) -> np.ndarray:
    """Two unit columns of ad(p) spanning T_p of the orbit (3x2)."""
    m = ad(LieVector.of(_xyz(p)))
    cols = [m[:, i] for i in range(3)]
    pairs = [(0, 1), (0, 2), (1, 2)]
    i, j = max(pairs, key=lambda ij: np.linalg.norm(np.cross(cols[ij[0]], cols[ij[1]])))
    e1 = cols[i] / np.linalg.norm(cols[i])
    e2 = cols[j] / np.linalg.norm(cols[j])
    return np.column_stack([e1, e2])


def morse_data(p, lam: float) -> MorseData:
    p = np.array(_xyz(p))
    if np.linalg.norm(grad_f(p)) > CRITICAL_TOL * max(1.0, lam):
        raise NotCritical(f"grad f at {p} is {grad_f(p)}")
    _require_on_orbit(p, lam)
    e = tangent_basis(p)
    h = e.T @ HESSIAN @ e
    eig = np.linalg.eigvalsh(h)
    return MorseData(
        point=p,
        restricted_hessian=h,
        nondegenerate=bool(abs(np.linalg.det(h)) > 1e-10),
        index=int(np.sum(eig < 0)),
    )


def flow_exact(p0, t: float) -> np.ndarray:
    # c1 e^-t (-1, 1) + c2 e^t (1, 1); avoids the cosh + sinh cancellation
    x0, y0, z0 = _xyz(p0)
    c1, c2 = eigen_coefficients(y0, z0)
    a, b = c1 * math.exp(-t), c2 * math.exp(t)
    return np.array([x0, b - a, b + a])


def eigen_coefficients(y0: float, z0: float) -> tuple[float, float]:
    """(c1, c2) with (y0, z0) = c1 (-1, 1) + c2 (1, 1)."""
    return (z0 - y0) / 2.0, (y0 + z0) / 2.0


def _limits(p0) -> tuple[LimitTag, LimitTag]:
    x0, y0, z0 = _xyz(p0)
    n = math.hypot(y0, z0)
    if n == 0.0:
        fixed = ConvergesTo((x0, 0.0, 0.0))
        return fixed, fixed
    c1, c2 = eigen_coefficients(y0 / n, z0 / n)
    forward = ConvergesTo((x0, 0.0, 0.0)) if abs(c2) <= LIMIT_ZERO_TOL else Escapes()
    backward = ConvergesTo((x0, 0.0, 0.0)) if abs(c1) <= LIMIT_ZERO_TOL else Escapes()
    return forward, backward


def classify_limit(p0, lam: float) -> tuple[LimitTag, LimitTag]:
    _require_on_orbit(p0, lam)
    return _limits(p0)


def _time_grid(t_end: float, h: float) -> np.ndarray:
    if t_end == 0.0:
        return np.zeros(1)
    # uniform steps of at most h landing exactly on t_end
    n = max(1, math.ceil(abs(t_end) / h - 1e-9))
    return t_end * np.arange(n + 1) / n


def flow_exact_trajectory(p0, t_end: float, h: float) -> Trajectory:
    _check_run(t_end, h)
    ts = _time_grid(t_end, h)
    pts = np.array([flow_exact(p0, t) for t in ts])
    fwd, bwd = _limits(p0)
    return _ordered(ts, pts, fwd, bwd, escaped=False)


def _check_run(t_end: float, h: float) -> None:
    if not h > 0:
        raise ValueError("step must be positive")
    if h > MAX_STEP:
        raise StepTooLarge(f"step {h!r} exceeds {MAX_STEP}")
    if abs(t_end) > MAX_TIME:
        raise ValueError(f"|t_end| must be <= {MAX_TIME}")


def _rk4_step(y: float, z: float, dt: float) -> tuple[float, float]:
    # x is constant along the field; only (y, z) moves
    k1y, k1z = z, y
    k2y, k2z = z + 0.5 * dt * k1z, y + 0.5 * dt * k1y
    k3y, k3z = z + 0.5 * dt * k2z, y + 0.5 * dt * k2y
    k4y, k4z = z + dt * k3z, y + dt * k3y
    return (
        y + dt / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
        z + dt / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z),
    )


def flow_numeric(p0, t_end: float, h: float = 1e-3) -> Trajectory:
    """Classical RK4 on p' = grad f(p), stopped once |p| exceeds the escape radius."""
    _check_run(t_end, h)
    ts = _time_grid(t_end, h)
    dt = ts[1] - ts[0] if len(ts) > 1 else 0.0
    x, y, z = _xyz(p0)
    pts = [(x, y, z)]
    escaped = False
    r2 = ESCAPE_RADIUS * ESCAPE_RADIUS
    for _ in range(len(ts) - 1):
        y, z = _rk4_step(y, z, dt)
        pts.append((x, y, z))
        if x * x + y * y + z * z > r2:
            escaped = True
            break
    ts = ts[: len(pts)]
    fwd, bwd = _limits(p0)
    if escaped:
        if t_end > 0:
            fwd = Escapes()
        else:
            bwd = Escapes()
    return _ordered(ts, np.array(pts), fwd, bwd, escaped)


def _ordered(ts, pts, fwd, bwd, escaped) -> Trajectory:
    if len(ts) > 1 and ts[-1] < ts[0]:
        ts, pts = ts[::-1].copy(), pts[::-1].copy()
    return Trajectory(ts, pts, fwd, bwd, escaped)


def escape_time(p0) -> float:
    """First t >= 0 at which the exact forward trajectory leaves the escape ball."""
    x0, y0, z0 = _xyz(p0)
    c1, c2 = eigen_coefficients(y0, z0)
    if c2 == 0.0:
        return math.inf
    # |p|^2 = x0^2 + 2 c1^2 e^-2t + 2 c2^2 e^2t; solve for u = e^2t
    a, c = 2.0 * c2 * c2, 2.0 * c1 * c1
    b = x0 * x0 - ESCAPE_RADIUS * ESCAPE_RADIUS
    u = (-b + math.sqrt(b * b - 4.0 * a * c)) / (2.0 * a)
    return max(0.0, 0.5 * math.log(u))
