import numpy as np
import pytest

from conftest import commutator_oracle, random_group, random_lie
from sl2orbits.algebra import E_A, E_B, E_C, GroupElement, LieVector, ad, bracket, conjugate
from sl2orbits.errors import DegeneratePoint, NotTangent
from sl2orbits.orbits import OrbitClass, OrbitKind, orbit_sample
from sl2orbits.symplectic import (
    DualVector,
    TangentVector,
    coad,
    coAd,
    coadjoint_orbit_point,
    jacobi_cyclic,
    kks,
    kks_with_lifts,
    killing_determinant,
    nondegeneracy_check,
    pairing,
    phi,
    tangent_lift,
    tangent_pair,
)

GRAM_ORACLE = np.diag([8.0, 8.0, -8.0])


def kks_oracle(p, a, b):
    # Killing pairing through the Gram matrix, bracket through matrix commutators
    return float(np.asarray(tuple(p)) @ GRAM_ORACLE @ commutator_oracle(a, b))


def random_dual(rng, r=3.0):
    return DualVector(*rng.uniform(-r, r, 3))


def random_tangent(rng, p, r=2.0):
    return ad(p) @ random_lie(rng, r).as_array()


def test_phi_examples():
    assert phi(E_A) == DualVector(8, 0, 0)
    assert phi(LieVector(0.0, 0.0, 0.0)) == DualVector(0, 0, 0)
    assert phi(E_C) == DualVector(0, 0, -8)


def test_phi_is_killing_pairing(rng):
    from sl2orbits.algebra import killing

    for _ in range(100):
        h, u = random_lie(rng, 3), random_lie(rng, 3)
        assert abs(pairing(phi(h), u) - killing(u, h)) <= 1e-12 * max(1.0, h.norm() * u.norm())


def test_coad_examples(rng):
    np.testing.assert_array_equal(coad(E_A), [[0, 0, 0], [0, 0, 2], [0, 2, 0]])
    np.testing.assert_array_equal(coad(LieVector(0.0, 0.0, 0.0)), np.zeros((3, 3)))
    for _ in range(100):
        u, v, xi = random_lie(rng, 3), random_lie(rng, 3), random_dual(rng)
        lhs = pairing(DualVector.of(coad(u) @ xi.as_array()), v)
        assert abs(lhs + pairing(xi, bracket(u, v))) <= 1e-12 * 30


def test_coAd_identity_and_definition(rng):
    np.testing.assert_array_equal(coAd(GroupElement.identity()), np.eye(3))
    for _ in range(100):
        g, x, xi = random_group(rng), random_lie(rng, 3), random_dual(rng)
        lhs = pairing(DualVector.of(coAd(g) @ xi.as_array()), x)
        rhs = pairing(xi, conjugate(g.inverse(), x))
        assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(rhs))


def test_coAd_equivariance(rng):
    for _ in range(100):
        g, u = random_group(rng), random_lie(rng, 3)
        lhs = coAd(g) @ phi(u).as_array()
        rhs = phi(conjugate(g, u)).as_array()
        assert np.max(np.abs(lhs - rhs)) <= 1e-9 * max(1.0, np.max(np.abs(rhs)))
        assert np.allclose(coadjoint_orbit_point(g, u).as_array(), rhs, atol=1e-9 * max(1.0, np.max(np.abs(rhs))))


def test_coAd_representation(rng):
    for _ in range(50):
        g, h = random_group(rng, 1.5), random_group(rng, 1.5)
        np.testing.assert_allclose(coAd(g @ h), coAd(g) @ coAd(h), atol=1e-9)


def test_tangent_lift_examples():
    a = tangent_lift(E_A, (0.0, 0.0, -2.0))
    assert np.allclose(ad(E_A) @ a.as_array(), [0, 0, -2], atol=1e-15)
    assert np.allclose(a.as_array(), [0, 1, 0], atol=1e-15)
    assert tangent_lift(E_A, (0.0, 0.0, 0.0)) == LieVector(0.0, 0.0, 0.0)
    with pytest.raises(NotTangent):
        tangent_lift(E_A, (1.0, 0.0, 0.0))
    with pytest.raises(NotTangent):
        tangent_lift(LieVector(0.0, 0.0, 0.0), (0.0, 0.0, 0.0))


def test_tangent_lift_random(rng):
    for _ in range(500):
        p = random_lie(rng, 4)
        v = random_tangent(rng, p)
        a = tangent_lift(p, v)
        assert np.linalg.norm(ad(p) @ a.as_array() - v) <= 1e-10 * max(1.0, p.norm() ** 2, np.linalg.norm(v))
        # the returned lift carries no kernel component
        assert abs(np.dot(a.as_array(), p.as_array())) <= 1e-9 * max(1.0, a.norm() * p.norm())


def test_tangent_vector_invariant():
    TangentVector(E_A, (0.0, 0.0, -2.0))
    with pytest.raises(NotTangent):
        TangentVector(E_A, (1.0, 0.0, 0.0))


def test_kks_example_against_oracle():
    v, w = (0.0, 0.0, -2.0), (0.0, -2.0, 0.0)
    assert kks(E_A, v, w) == 16.0
    assert abs(kks_oracle(E_A, E_B, E_C) - 16.0) <= 1e-12
    assert kks(E_A, v, v) == 0.0


def test_kks_against_oracle_random(rng):
    for _ in range(300):
        p = random_lie(rng, 3)
        a, b = random_lie(rng, 2), random_lie(rng, 2)
        v, w = ad(p) @ a.as_array(), ad(p) @ b.as_array()
        expected = kks_oracle(p, a, b)
        assert abs(kks(p, v, w) - expected) <= 1e-9 * max(1.0, abs(expected), p.norm() ** 3)


def test_kks_skew_and_bilinear(rng):
    for _ in range(300):
        p = random_lie(rng, 3)
        v, w, u = (random_tangent(rng, p) for _ in range(3))
        s = rng.uniform(-3, 3)
        scale = max(1.0, p.norm() * np.linalg.norm(v) * np.linalg.norm(w))
        assert abs(kks(p, v, w) + kks(p, w, v)) <= 1e-10 * scale
        assert abs(kks(p, v, v)) <= 1e-10 * scale
        lhs = kks(p, s * v + u, w)
        rhs = s * kks(p, v, w) + kks(p, u, w)
        assert abs(lhs - rhs) <= 1e-9 * max(scale, p.norm() * np.linalg.norm(u) * np.linalg.norm(w))


def test_kks_representative_independence(rng):
    for _ in range(300):
        p = random_lie(rng, 3)
        a, b = random_lie(rng, 2), random_lie(rng, 2)
        s, r = rng.uniform(-5, 5, 2)
        base = kks_with_lifts(p, a, b)
        moved = kks_with_lifts(p, a + s * p, b + r * p)
        scale = max(1.0, p.norm() * (a + s * p).norm() * (b + r * p).norm())
        assert abs(base - moved) <= 1e-10 * scale


def test_jacobi_cyclic(rng):
    xi = DualVector(1.5, -2.0, 0.25)
    assert abs(jacobi_cyclic(xi, E_A, E_B, E_C)) == 0.0
    assert jacobi_cyclic(DualVector(0, 0, 0), E_A, E_B, E_C) == 0.0
    for _ in range(1000):
        xi = random_dual(rng)
        x, y, z = (random_lie(rng, 2) for _ in range(3))
        scale = max(1.0, np.linalg.norm(xi.as_array()) * x.norm() * y.norm() * z.norm())
        assert abs(jacobi_cyclic(xi, x, y, z)) < 1e-10 * scale


def test_nondegeneracy_examples():
    assert nondegeneracy_check(E_A) == 16.0
    # tangent columns of ad(2A) are twice those of ad(A), so the lifts are
    # unchanged and only the base point doubles: B(2A, [B, C]) = 32
    e1, e2 = tangent_pair(2.0 * E_A)
    lifts = tangent_lift(2.0 * E_A, e1), tangent_lift(2.0 * E_A, e2)
    assert abs(kks_oracle(2.0 * E_A, *lifts) - 32.0) <= 1e-12
    assert nondegeneracy_check(2.0 * E_A) == 32.0
    with pytest.raises(DegeneratePoint):
        nondegeneracy_check(LieVector(0.0, 0.0, 0.0))


def test_nondegeneracy_on_orbit_samples():
    for lam in (0.5, 1.0, 2.0):
        for p in orbit_sample(OrbitClass(OrbitKind.ONE_SHEETED, lam), 100, 5):
            assert nondegeneracy_check(p) > 1e-6
    for p in orbit_sample(OrbitClass(OrbitKind.TWO_SHEETED_UPPER, 1.0), 100, 6):
        assert nondegeneracy_check(p) > 1e-6


def test_killing_nondegenerate(rng):
    assert round(killing_determinant()) == -512
    for _ in range(100):
        h = random_lie(rng, 3)
        assert np.linalg.norm(phi(h).as_array()) >= 8 * h.norm() * (1 - 1e-12)
