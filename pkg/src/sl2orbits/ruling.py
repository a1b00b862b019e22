"""The two line families ruling x^2 + y^2 - z^2 = lam^2.

Every ruling line is a rotation about the z-axis of one of

    l1(t) = (lam, 0, 0) + t (0,  1, -1)     family F1
    l2(t) = (lam, 0, 0) + t (0, -1, -1)     family F2

Lines are stored with their base on the waist circle z = 0 and their
direction scaled to z-component -1, so equal lines have equal fields.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveLambda, NotARuling, NotOnSurface

SURFACE_TOL = 1e-8
CONTAINS_TOL = 1e-10
FAMILY_TOL = 1e-8


class Family(enum.Enum):
    F1 = "F1"
    F2 = "F2"


@dataclass(frozen=True)
class RulingLine:
    base: np.ndarray
    dir: np.ndarray
    family: Family
    lam: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", np.asarray(self.base, dtype=float).reshape(3))
        object.__setattr__(self, "dir", np.asarray(self.dir, dtype=float).reshape(3))

    def point(self, t):
        t = np.asarray(t, dtype=float)
        return self.base + t[..., None] * self.dir

    def canonical(self) -> RulingLine:
        """Same line with dir_z = -1 and base on the plane z = 0."""
        dz = self.dir[2]
        if dz == 0.0:
            raise NotARuling("a ruling direction has non-zero z-component")
        d = self.dir / -dz
        base = self.base + self.base[2] * d
        base[2] = 0.0
        return RulingLine(base, d, self.family, self.lam)

    def distance(self, p) -> float:
        p = np.asarray(p, dtype=float)
        u = self.dir / np.linalg.norm(self.dir)
        w = p - self.base
        return float(np.linalg.norm(w - np.dot(w, u) * u))


def rotation_z(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def surface_residual(p, lam: float) -> float:
    x, y, z = (float(v) for v in p)
    return x * x + y * y - z * z - lam * lam


def _check_lambda(lam: float) -> None:
    if not lam > 0:
        raise NonPositiveLambda(f"lambda must be > 0, got {lam!r}")


def base_lines(lam: float) -> tuple[RulingLine, RulingLine]:
    _check_lambda(lam)
    b = (lam, 0.0, 0.0)
    return (
        RulingLine(b, (0.0, 1.0, -1.0), Family.F1, lam),
        RulingLine(b, (0.0, -1.0, -1.0), Family.F2, lam),
    )


def rotate_line(line: RulingLine, theta: float) -> RulingLine:
    r = rotation_z(theta)
    return RulingLine(r @ line.base, r @ line.dir, line.family, line.lam)


def lines_through_point(p, lam: float) -> tuple[RulingLine, RulingLine]:
    """The F1 and F2 lines through ``p`` on the hyperboloid of parameter ``lam``.

    R_theta l1 meets height z0 at t = -z0, where it reads
    (lam cos + z0 sin, lam sin - z0 cos, z0); matching (x0, y0) is a 2x2
    linear system with determinant lam^2 + z0^2. The F2 system is the same
    with z0 -> -z0.
    """
    _check_lambda(lam)
    x0, y0, z0 = (float(v) for v in p)
    if abs(surface_residual(p, lam)) > SURFACE_TOL * max(1.0, lam * lam):
        raise NotOnSurface(f"{(x0, y0, z0)} is not on x^2+y^2-z^2 = {lam * lam!r}")
    den = lam * lam + z0 * z0
    theta = math.atan2((z0 * x0 + lam * y0) / den, (lam * x0 - z0 * y0) / den)
    phi = math.atan2((lam * y0 - z0 * x0) / den, (lam * x0 + z0 * y0) / den)
    l1, l2 = base_lines(lam)
    return rotate_line(l1, theta), rotate_line(l2, phi)


def contains(line: RulingLine, lam: float) -> bool:
    # the residual is quadratic in t, so three samples decide it
    tol = CONTAINS_TOL * max(1.0, lam * lam)
    return all(abs(surface_residual(line.point(t), lam)) <= tol for t in (-1.0, 0.0, 1.0))


def family_of(line: RulingLine) -> Family:
    c = line.canonical()
    angle = math.atan2(c.base[1], c.base[0])
    d = rotation_z(-angle) @ c.dir
    if np.max(np.abs(d - (0.0, 1.0, -1.0))) <= FAMILY_TOL:
        return Family.F1
    if np.max(np.abs(d - (0.0, -1.0, -1.0))) <= FAMILY_TOL:
        return Family.F2
    raise NotARuling(f"direction {d} matches neither family")


def same_line(a: RulingLine, b: RulingLine, tol: float = 1e-9) -> bool:
    ca, cb = a.canonical(), b.canonical()
    return bool(
        np.max(np.abs(ca.base - cb.base)) <= tol and np.max(np.abs(ca.dir - cb.dir)) <= tol
    )


def rotation_between(a: RulingLine, b: RulingLine) -> float:
    """Angle theta with R_theta a = b for two lines of one family."""
    ca, cb = a.canonical(), b.canonical()
    return math.atan2(cb.base[1], cb.base[0]) - math.atan2(ca.base[1], ca.base[0])
