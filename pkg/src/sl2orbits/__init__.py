"""Adjoint orbits of sl(2,R): classification, normal forms, the double ruling
of the one-sheeted orbit, the gradient flow of f = yz on it, and the KKS
symplectic form transported by the Killing form."""

from .algebra import (
    GroupElement,
    LieVector,
    Mat2,
    ad,
    basis,
    bracket,
    conjugate,
    det_form,
    exp,
    from_matrix,
    killing,
    to_matrix,
)
from .errors import SL2Error
from .orbits import OrbitClass, OrbitKind, classify, normal_form, orbit_sample, same_orbit

__all__ = [
    "GroupElement",
    "LieVector",
    "Mat2",
    "OrbitClass",
    "OrbitKind",
    "SL2Error",
    "ad",
    "basis",
    "bracket",
    "classify",
    "conjugate",
    "det_form",
    "exp",
    "from_matrix",
    "killing",
    "normal_form",
    "orbit_sample",
    "same_orbit",
    "to_matrix",
]
