"""Coadjoint action and the KKS form carried to the adjoint orbit.

Dual vectors are coordinates (a, b, c) against the basis dual to (A, B, C),
so <xi, X> = a x + b y + c z. The Killing form gives the identification
phi(h) = K h with K = diag(8, 8, -8), and the induced form on the orbit
through p is

    omega'_p([p, a], [p, b]) = B(p, [a, b]).

With the commutator bracket, values are 8x the half-scale convention
(Killing contributes 4, the bracket in [a, b] another 2).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .algebra import (
    GroupElement,
    LieVector,
    ad,
    ad_group,
    bracket,
    killing,
    killing_gram,
)
from .errors import DegeneratePoint, NotTangent

GRAM = killing_gram()
TANGENT_TOL = 1e-8
DEGENERACY_TOL = 1e-10


@dataclass(frozen=True, slots=True)
class DualVector:
    a: float
    b: float
    c: float

    def __iter__(self) -> Iterator[float]:
        yield self.a
        yield self.b
        yield self.c

    def as_array(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c], dtype=float)

    @classmethod
    def of(cls, v) -> DualVector:
        if isinstance(v, DualVector):
            return v
        a, b, c = v
        return cls(float(a), float(b), float(c))


@dataclass(frozen=True)
class TangentVector:
    base: LieVector
    vec: np.ndarray

    def __post_init__(self) -> None:
        v = np.asarray(self.vec, dtype=float).reshape(3)
        object.__setattr__(self, "vec", v)
        x, y, z = self.base
        s = max(1.0, self.base.norm() * float(np.linalg.norm(v)))
        if abs(x * v[0] + y * v[1] - z * v[2]) > 1e-9 * s:
            raise NotTangent(f"{v} is not tangent to the orbit at {self.base}")


def pairing(xi: DualVector, h: LieVector) -> float:
    return xi.a * h.x + xi.b * h.y + xi.c * h.z


def phi(h: LieVector) -> DualVector:
    """The functional u -> killing(u, h)."""
    return DualVector.of(GRAM @ LieVector.of(h).as_array())


def coad(u: LieVector) -> np.ndarray:
    """ad*_u on dual coordinates: <ad*_u xi, v> = -xi([u, v])."""
    return -ad(LieVector.of(u)).T


def coAd(g: GroupElement) -> np.ndarray:
    """Ad*_g on dual coordinates: <Ad*_g xi, X> = <xi, Ad_{g^-1} X>."""
    return ad_group(g.inverse()).T


def _scale(p: LieVector, v) -> float:
    return max(1.0, p.x * p.x + p.y * p.y + p.z * p.z, float(np.linalg.norm(v)))


def tangent_lift(p: LieVector, v) -> LieVector:
    """A solution a of [p, a] = v, the one Euclidean-orthogonal to p.

    ad(p) has rank 2 with kernel span{p}. Adding a multiple of p p^T to the
    normal equations fixes the kernel component at zero without touching
    the rest, so one direct 3x3 solve suffices.
    """
    p = LieVector.of(p)
    v = np.asarray(v, dtype=float).reshape(3)
    pv = p.as_array()
    pn2 = float(pv @ pv)
    if pn2 == 0.0:
        raise NotTangent("the origin has no tangent space")
    m = ad(p)
    normal = m.T @ m
    reg = 0.5 * np.trace(normal) / pn2
    a = np.linalg.solve(normal + reg * np.outer(pv, pv), m.T @ v)
    if np.linalg.norm(m @ a - v) > TANGENT_TOL * _scale(p, v):
        raise NotTangent(f"{v} is not in the image of ad({p})")
    return LieVector.of(a)


def kks(p: LieVector, v, w) -> float:
    """omega'_p(v, w) = killing(p, [a, b]) for lifts [p, a] = v, [p, b] = w."""
    p = LieVector.of(p)
    return killing(p, bracket(tangent_lift(p, v), tangent_lift(p, w)))


def kks_with_lifts(p: LieVector, a: LieVector, b: LieVector) -> float:
    """Same form evaluated from lift representatives directly."""
    return killing(LieVector.of(p), bracket(LieVector.of(a), LieVector.of(b)))


def jacobi_cyclic(xi: DualVector, x: LieVector, y: LieVector, z: LieVector) -> float:
    """-xi([[x,y],z]) + xi([[x,z],y]) - xi([[y,z],x]); zero by the Jacobi identity."""
    xi = DualVector.of(xi)
    x, y, z = LieVector.of(x), LieVector.of(y), LieVector.of(z)
    return (
        -pairing(xi, bracket(bracket(x, y), z))
        + pairing(xi, bracket(bracket(x, z), y))
        - pairing(xi, bracket(bracket(y, z), x))
    )


def tangent_pair(p: LieVector) -> tuple[np.ndarray, np.ndarray]:
    """Two independent columns of ad(p), unnormalized, in column order."""
    m = ad(LieVector.of(p))
    cols = [m[:, i] for i in range(3)]
    pairs = [(0, 1), (0, 2), (1, 2)]
    areas = [float(np.linalg.norm(np.cross(cols[i], cols[j]))) for i, j in pairs]
    best = max(areas)
    # earliest pair within a whisker of the best, so ties resolve by column order
    i, j = next(pr for pr, ar in zip(pairs, areas) if ar >= best * (1.0 - 1e-12))
    return cols[i], cols[j]


def nondegeneracy_check(p: LieVector) -> float:
    p = LieVector.of(p)
    if p.norm() == 0.0:
        raise DegeneratePoint("the zero orbit carries no symplectic form")
    e1, e2 = tangent_pair(p)
    val = abs(kks(p, e1, e2))
    if val < DEGENERACY_TOL * max(1.0, p.norm() ** 2):
        raise DegeneratePoint(f"omega' vanishes on the tangent basis at {p}")
    return val


def killing_determinant() -> float:
    return float(np.linalg.det(GRAM))


def coadjoint_orbit_point(g: GroupElement, p: LieVector) -> DualVector:
    return DualVector.of(coAd(g) @ phi(p).as_array())
