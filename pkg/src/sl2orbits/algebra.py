"""Small exact kernels for sl(2,R) in the basis

    A = [[0, 1], [1, 0]],  B = [[1, 0], [0, -1]],  C = [[0, 1], [-1, 0]].

An element H = xA + yB + zC has matrix [[y, x+z], [x-z, -y]] and
determinant z^2 - x^2 - y^2.

The bracket is the true matrix commutator, so [B, A] = 2C, [C, A] = 2B and
[B, C] = 2A. Tables written with the half-scale relations [B, A] = C, ...
differ by exact factors: ad matrices by 2, Killing values by 4.

Scalar kernels work on Python floats; numpy appears only for 3x3 outputs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .errors import NotInSL2, NotTraceless

TRACE_TOL = 1e-12
NILPOTENT_THRESHOLD = 1e-12
SERIES_THRESHOLD = 1e-4
# beyond this squared entry size the closing det-correction in exp() kicks in
_DET_FIX_SCALE = 16.0


@dataclass(frozen=True, slots=True)
class LieVector:
    """H = x*A + y*B + z*C."""

    x: float
    y: float
    z: float

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y
        yield self.z

    def __add__(self, other: LieVector) -> LieVector:
        return LieVector(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: LieVector) -> LieVector:
        return LieVector(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> LieVector:
        return LieVector(-self.x, -self.y, -self.z)

    def __mul__(self, s: float) -> LieVector:
        return LieVector(s * self.x, s * self.y, s * self.z)

    __rmul__ = __mul__

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    @classmethod
    def of(cls, v: Sequence[float] | LieVector) -> LieVector:
        if isinstance(v, LieVector):
            return v
        x, y, z = v
        return cls(float(x), float(y), float(z))


ZERO = LieVector(0.0, 0.0, 0.0)
E_A = LieVector(1.0, 0.0, 0.0)
E_B = LieVector(0.0, 1.0, 0.0)
E_C = LieVector(0.0, 0.0, 1.0)


class Mat2(NamedTuple):
    """Real 2x2 matrix, row-major."""

    m11: float
    m12: float
    m21: float
    m22: float

    def __matmul__(self, o: Mat2) -> Mat2:  # type: ignore[override]
        return Mat2(
            self.m11 * o.m11 + self.m12 * o.m21,
            self.m11 * o.m12 + self.m12 * o.m22,
            self.m21 * o.m11 + self.m22 * o.m21,
            self.m21 * o.m12 + self.m22 * o.m22,
        )

    def det(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self) -> float:
        return self.m11 + self.m22

    def inverse(self) -> Mat2:
        d = self.det()
        return Mat2(self.m22 / d, -self.m12 / d, -self.m21 / d, self.m11 / d)

    def frobenius(self) -> float:
        return math.sqrt(self.m11**2 + self.m12**2 + self.m21**2 + self.m22**2)

    def to_array(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]], dtype=float)

    @classmethod
    def from_array(cls, a) -> Mat2:
        a = np.asarray(a, dtype=float)
        return cls(float(a[0, 0]), float(a[0, 1]), float(a[1, 0]), float(a[1, 1]))


IDENTITY = Mat2(1.0, 0.0, 0.0, 1.0)


def det_tolerance(m: Mat2) -> float:
    return 1e-9 * max(1.0, m.frobenius() ** 2)


@dataclass(frozen=True, slots=True)
class GroupElement:
    """An element of SL(2,R); construction checks the determinant."""

    mat: Mat2

    def __post_init__(self) -> None:
        m = Mat2(*self.mat)
        object.__setattr__(self, "mat", m)
        if not all(math.isfinite(v) for v in m):
            raise NotInSL2(f"non-finite entries: {m}")
        if abs(m.det() - 1.0) > det_tolerance(m):
            raise NotInSL2(f"det = {m.det()!r}, expected 1")

    def __matmul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(self.mat @ other.mat)

    def inverse(self) -> GroupElement:
        # det is 1 up to roundoff; the adjugate is the inverse
        m = self.mat
        return GroupElement(Mat2(m.m22, -m.m12, -m.m21, m.m11))

    @classmethod
    def identity(cls) -> GroupElement:
        return cls(IDENTITY)


def basis() -> tuple[Mat2, Mat2, Mat2]:
    return (
        Mat2(0.0, 1.0, 1.0, 0.0),
        Mat2(1.0, 0.0, 0.0, -1.0),
        Mat2(0.0, 1.0, -1.0, 0.0),
    )


def to_matrix(h: LieVector) -> Mat2:
    x, y, z = h
    return Mat2(y, x + z, x - z, -y)


def from_matrix(m: Mat2, tol: float = TRACE_TOL) -> LieVector:
    m = Mat2(*m)
    if abs(m.m11 + m.m22) > tol * max(1.0, abs(m.m11), abs(m.m22)):
        raise NotTraceless(f"trace {m.m11 + m.m22!r} is not zero")
    return LieVector((m.m12 + m.m21) / 2.0, m.m11, (m.m12 - m.m21) / 2.0)


def bracket(u: LieVector, v: LieVector) -> LieVector:
    """Commutator [u, v] = UV - VU in coordinates."""
    # expanded form of from_matrix(UV - VU); exact zero on (u, u)
    ux, uy, uz = u
    vx, vy, vz = v
    return LieVector(
        2.0 * (uy * vz - uz * vy),
        2.0 * (uz * vx - ux * vz),
        2.0 * (uy * vx - ux * vy),
    )


def ad(h: LieVector) -> np.ndarray:
    """3x3 matrix of v -> [h, v] in the ordered basis (A, B, C).

    Equal to 2 * [[0, -z, y], [z, 0, -x], [y, -x, 0]]; the kernel is span{h}.
    """
    cols = [bracket(h, e) for e in (E_A, E_B, E_C)]
    return np.array([[c.x for c in cols], [c.y for c in cols], [c.z for c in cols]])


def killing(u: LieVector, v: LieVector) -> float:
    """tr(ad(u) ad(v)); equals 8 (ux vx + uy vy - uz vz)."""
    return float(np.trace(ad(u) @ ad(v)))


def killing_gram() -> np.ndarray:
    es = (E_A, E_B, E_C)
    return np.array([[killing(a, b) for b in es] for a in es])


def det_form(h: LieVector) -> float:
    x, y, z = h
    return z * z - x * x - y * y


def _cos_sinc(d: float) -> tuple[float, float]:
    """Return (cos(sqrt d), sin(sqrt d)/sqrt d), continued to d < 0 as cosh/sinh."""
    if abs(d) < NILPOTENT_THRESHOLD:
        return 1.0, 1.0
    if abs(d) < SERIES_THRESHOLD:
        # both functions are power series in -d; 6 terms is far below eps here
        c = s = 0.0
        term_c, term_s = 1.0, 1.0
        for k in range(6):
            c += term_c
            s += term_s
            term_c *= -d / ((2 * k + 1) * (2 * k + 2))
            term_s *= -d / ((2 * k + 2) * (2 * k + 3))
        return c, s
    if d > 0:
        r = math.sqrt(d)
        return math.cos(r), math.sin(r) / r
    r = math.sqrt(-d)
    return math.cosh(r), math.sinh(r) / r


def _restore_unit_det(m: Mat2) -> Mat2:
    """Re-solve one entry from det = 1 in exact arithmetic.

    The partner of the largest-magnitude entry is recomputed, which keeps
    the exact determinant of the stored floats within a few ulps of 1.
    """
    vals = list(m)
    k = max(range(4), key=lambda i: abs(vals[i]))
    f = [Fraction(v) for v in vals]
    if k == 0:
        vals[3] = float((1 + f[1] * f[2]) / f[0])
    elif k == 3:
        vals[0] = float((1 + f[1] * f[2]) / f[3])
    elif k == 1:
        vals[2] = float((f[0] * f[3] - 1) / f[1])
    else:
        vals[1] = float((f[0] * f[3] - 1) / f[2])
    return Mat2(*vals)


def exp(h: LieVector) -> GroupElement:
    """Closed-form matrix exponential, using M^2 = -det(M) I for traceless M."""
    c, s = _cos_sinc(det_form(h))
    x, y, z = h
    m = Mat2(c + s * y, s * (x + z), s * (x - z), c - s * y)
    if max(abs(v) for v in m) ** 2 > _DET_FIX_SCALE:
        m = _restore_unit_det(m)
    return GroupElement(m)


def _ad_group_rows(m: Mat2) -> tuple[tuple[float, float, float], ...]:
    # g E g^-1 for E in (A, B, C), expanded with g^-1 = adj(g)
    a, b, c, d = m
    aa, bb, cc, dd = a * a, b * b, c * c, d * d
    return (
        (0.5 * (aa - bb - cc + dd), c * d - a * b, 0.5 * (aa + bb - cc - dd)),
        (b * d - a * c, a * d + b * c, -(a * c + b * d)),
        (0.5 * (aa - bb + cc - dd), -(a * b + c * d), 0.5 * (aa + bb + cc + dd)),
    )


def conjugate(g: GroupElement, h: LieVector) -> LieVector:
    """Ad_g(h) = g H g^-1, evaluated as a 3x3 map on coordinates."""
    r1, r2, r3 = _ad_group_rows(g.mat)
    x, y, z = h
    return LieVector(
        r1[0] * x + r1[1] * y + r1[2] * z,
        r2[0] * x + r2[1] * y + r2[2] * z,
        r3[0] * x + r3[1] * y + r3[2] * z,
    )


def ad_group(g: GroupElement) -> np.ndarray:
    """3x3 matrix of Ad_g in the basis (A, B, C)."""
    return np.array(_ad_group_rows(g.mat))
