"""Adjoint orbit classification and explicit normal forms.

Orbits are level sets of q = x^2 + y^2 - z^2:

    q = lam^2 > 0   one-sheeted hyperboloid, representative lam*A
    q = -lam^2 < 0  two-sheeted hyperboloid, one orbit per sheet, +-lam*C
    q = 0, h != 0   cone, one orbit per half, +-(A + C) = +-(1, 0, 1)
    h = 0           the origin

The conjugators are built the constructive way: eigenvectors (real case),
real and imaginary parts of a complex eigenvector (elliptic case) or a
Jordan chain (nilpotent case), rescaled into SL(2,R). Whenever the raw
change of basis has the wrong determinant sign, fixing it flips the sign
of the target, which is why the two sheets never meet.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    IDENTITY,
    GroupElement,
    LieVector,
    Mat2,
    conjugate,
    to_matrix,
)
from .errors import Indeterminate, ZeroClassNotSampleable, ZeroInput

DEFAULT_TOL = 1e-9


class OrbitKind(enum.Enum):
    ONE_SHEETED = "one_sheeted"
    TWO_SHEETED_UPPER = "two_sheeted_upper"
    TWO_SHEETED_LOWER = "two_sheeted_lower"
    CONE_UPPER = "cone_upper"
    CONE_LOWER = "cone_lower"
    ZERO = "zero"


_HYPERBOLOIDS = {OrbitKind.ONE_SHEETED, OrbitKind.TWO_SHEETED_UPPER, OrbitKind.TWO_SHEETED_LOWER}


@dataclass(frozen=True)
class OrbitClass:
    kind: OrbitKind
    lam: float | None = None

    def __post_init__(self) -> None:
        if self.kind in _HYPERBOLOIDS:
            if self.lam is None or not self.lam > 0:
                raise ValueError(f"{self.kind.value} needs lambda > 0, got {self.lam!r}")
        elif self.lam is not None:
            raise ValueError(f"{self.kind.value} carries no lambda")

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def sign(self) -> int:
        """Sign of z on the orbit (0 for one-sheeted and zero classes)."""
        if self.kind in (OrbitKind.TWO_SHEETED_UPPER, OrbitKind.CONE_UPPER):
            return 1
        if self.kind in (OrbitKind.TWO_SHEETED_LOWER, OrbitKind.CONE_LOWER):
            return -1
        return 0

    def matches(self, other: OrbitClass, tol: float = DEFAULT_TOL) -> bool:
        if self.kind != other.kind:
            return False
        if self.lam is None:
            return True
        return abs(self.lam - other.lam) <= tol * max(1.0, self.lam, other.lam) ** 2

    def representative(self) -> LieVector:
        k, lam = self.kind, self.lam
        if k is OrbitKind.ONE_SHEETED:
            return LieVector(lam, 0.0, 0.0)
        if k is OrbitKind.TWO_SHEETED_UPPER:
            return LieVector(0.0, 0.0, lam)
        if k is OrbitKind.TWO_SHEETED_LOWER:
            return LieVector(0.0, 0.0, -lam)
        if k is OrbitKind.CONE_UPPER:
            return LieVector(1.0, 0.0, 1.0)
        if k is OrbitKind.CONE_LOWER:
            return LieVector(-1.0, 0.0, -1.0)
        return LieVector(0.0, 0.0, 0.0)

    @classmethod
    def from_name(cls, name: str, lam: float | None = None) -> OrbitClass:
        kind = OrbitKind(name)
        return cls(kind, lam if kind in _HYPERBOLOIDS else None)


@dataclass(frozen=True)
class NormalFormResult:
    conjugator: GroupElement
    representative: LieVector
    orbit: OrbitClass


def scale(h: LieVector) -> float:
    return max(1.0, h.x * h.x + h.y * h.y + h.z * h.z)


def classify(h: LieVector, tol: float = DEFAULT_TOL) -> OrbitClass:
    if tol < 0:
        raise ValueError("tol must be >= 0")
    x, y, z = h
    if abs(x) <= tol and abs(y) <= tol and abs(z) <= tol:
        return OrbitClass(OrbitKind.ZERO)
    q = x * x + y * y - z * z
    if abs(q) <= tol * scale(h):
        if abs(z) <= tol:
            raise Indeterminate(f"{h} is numerically on the cone with no definite sheet")
        return OrbitClass(OrbitKind.CONE_UPPER if z > 0 else OrbitKind.CONE_LOWER)
    if q > 0:
        return OrbitClass(OrbitKind.ONE_SHEETED, math.sqrt(q))
    lam = math.sqrt(-q)
    return OrbitClass(OrbitKind.TWO_SHEETED_UPPER if z > 0 else OrbitKind.TWO_SHEETED_LOWER, lam)


def _canonical_sign(m: Mat2) -> Mat2:
    # g and -g act identically; pick the one whose first significant entry is positive
    cutoff = 1e-12 * max(abs(v) for v in m)
    for v in m:
        if abs(v) > cutoff:
            return m if v > 0 else Mat2(*(-e for e in m))
    return m


def _unit_positive(v0: float, v1: float) -> tuple[float, float]:
    n = math.hypot(v0, v1)
    v0, v1 = v0 / n, v1 / n
    lead = v0 if abs(v0) >= abs(v1) else v1
    return (v0, v1) if lead > 0 else (-v0, -v1)


def _real_eigenvector(m: Mat2, mu: float) -> tuple[float, float]:
    # null vector of M - mu I from whichever row is better conditioned
    r1 = (m.m12, mu - m.m11)
    r2 = (mu - m.m22, m.m21)
    best = r1 if math.hypot(*r1) >= math.hypot(*r2) else r2
    return _unit_positive(*best)


# columns are unit eigenvectors of A for +1 and -1; det = 1
_SQ = 1.0 / math.sqrt(2.0)
_A_DIAGONALIZER = Mat2(_SQ, -_SQ, _SQ, _SQ)


def _cols(c1: tuple[float, float], c2: tuple[float, float]) -> Mat2:
    return Mat2(c1[0], c2[0], c1[1], c2[1])


def _one_sheeted(h: LieVector, lam: float) -> tuple[Mat2, LieVector]:
    m = to_matrix(h)
    v = _cols(_real_eigenvector(m, lam), _real_eigenvector(m, -lam))
    d = v.det()
    # first column scaled by 1/det: stays an eigenvector, det becomes 1
    v = Mat2(v.m11 / d, v.m12, v.m21 / d, v.m22)
    # H = V diag(lam, -lam) V^-1 and lam A = V0 diag(lam, -lam) V0^-1
    return _A_DIAGONALIZER @ v.inverse(), LieVector(lam, 0.0, 0.0)


def _two_sheeted(h: LieVector, lam: float) -> tuple[Mat2, LieVector]:
    x, y, z = h
    # eigenvector w = u + i v of H for i*lam; Q = [u v] gives Q^-1 H Q = lam C
    if abs(x + z) >= abs(x - z):
        u, v = (x + z, -y), (0.0, lam)
    else:
        u, v = (y, x - z), (lam, 0.0)
    q = _cols(u, v)
    sign = 1.0
    if q.det() < 0:
        # conjugate eigenvector: [u, -v] turns lam C into -lam C
        q = _cols(u, (-v[0], -v[1]))
        sign = -1.0
    s = 1.0 / math.sqrt(q.det())
    q = Mat2(*(s * e for e in q))
    return q.inverse(), LieVector(0.0, 0.0, sign * lam)


def _cone(h: LieVector) -> tuple[Mat2, LieVector]:
    m = to_matrix(h)
    # Jordan chain (Hw, w) from the basis vector with the larger image
    if math.hypot(m.m11, m.m21) >= math.hypot(m.m12, m.m22):
        w = (1.0, 0.0)
    else:
        w = (0.0, 1.0)
    hw = (m.m11 * w[0] + m.m12 * w[1], m.m21 * w[0] + m.m22 * w[1])
    q = _cols(hw, w)
    sign = 1.0
    if q.det() < 0:
        hw = (-hw[0], -hw[1])
        q = _cols(hw, w)
        sign = -1.0
    # rescale to det 1 with H(beta w) = 2 sign (alpha Hw): target sign*(A + C)
    alpha = 1.0 / math.sqrt(2.0 * q.det())
    beta = 2.0 * alpha
    q = _cols((alpha * hw[0], alpha * hw[1]), (beta * w[0], beta * w[1]))
    return q.inverse(), LieVector(sign, 0.0, sign)


def normal_form(h: LieVector, tol: float = DEFAULT_TOL) -> NormalFormResult:
    """Canonical representative of the orbit of ``h`` and a conjugator onto it."""
    h = LieVector.of(h)
    orbit = classify(h, tol)
    kind = orbit.kind
    if kind is OrbitKind.ZERO:
        raise ZeroInput("the zero element has no normal-form conjugator")
    if kind is OrbitKind.ONE_SHEETED:
        mat, rep = _one_sheeted(h, orbit.lam)
    elif kind in _HYPERBOLOIDS:
        mat, rep = _two_sheeted(h, orbit.lam)
    else:
        mat, rep = _cone(h)
    if rep.z * orbit.sign < 0:
        raise Indeterminate(f"sheet of {h} disagrees between sign(z) and the Jordan basis")
    # snap exact matches to the identity so canonical inputs return it
    if rep == h:
        mat = IDENTITY
    return NormalFormResult(GroupElement(_canonical_sign(mat)), rep, orbit)


def same_orbit(h: LieVector, k: LieVector, tol: float = DEFAULT_TOL) -> GroupElement | None:
    """A group element g with g h g^-1 = k, or None when the orbits differ."""
    h, k = LieVector.of(h), LieVector.of(k)
    ch, ck = classify(h, tol), classify(k, tol)
    if not ch.matches(ck, tol):
        return None
    if ch.kind is OrbitKind.ZERO:
        return GroupElement.identity()
    if h == k:
        return GroupElement.identity()
    gh = normal_form(h, tol).conjugator
    gk = normal_form(k, tol).conjugator
    return GroupElement(_canonical_sign((gk.inverse() @ gh).mat))


def orbit_sample(orbit: OrbitClass, n: int, seed: int) -> list[LieVector]:
    """``n`` points on the orbit's quadric from a seeded direct parametrization."""
    if n < 1:
        raise ValueError("n must be >= 1")
    kind = orbit.kind
    if kind is OrbitKind.ZERO:
        if n > 1:
            raise ZeroClassNotSampleable("the zero orbit is a single point")
        return [LieVector(0.0, 0.0, 0.0)]
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.0, 2.0 * math.pi, size=n)
    lam = orbit.lam if orbit.lam is not None else 1.0
    if kind is OrbitKind.ONE_SHEETED:
        t = rng.uniform(-3.0 * lam, 3.0 * lam, size=n)
        r = np.sqrt(lam * lam + t * t)
        pts = np.column_stack([r * np.cos(theta), r * np.sin(theta), t])
    else:
        r = rng.uniform(0.0, 3.0 * lam, size=n)
        if kind in (OrbitKind.CONE_UPPER, OrbitKind.CONE_LOWER):
            # r = 0 is the origin, a different orbit
            r = np.where(r == 0.0, 1.0, r)
            z = r.copy()
        else:
            z = np.sqrt(lam * lam + r * r)
        pts = np.column_stack([r * np.cos(theta), r * np.sin(theta), orbit.sign * z])
    return [LieVector(float(a), float(b), float(c)) for a, b, c in pts]


def verify_conjugation(g: GroupElement, h: LieVector, k: LieVector) -> float:
    """Residual |g h g^-1 - k| (max norm); a convenience for callers."""
    c = conjugate(g, h)
    return max(abs(c.x - k.x), abs(c.y - k.y), abs(c.z - k.z))
