import pytest
from hypothesis import given

from qinvol import (
    CANONICAL_TRIAD,
    EPS_ALG,
    EPS_RECON,
    UNIT_I,
    InvalidTriadError,
    Quaternion,
    UnitVector3,
    Vector3,
    complete_triad,
    decompose,
    scalar_and_vector_parts,
    split,
    split_quaternion,
)

from .strategies import quaternions, triads, unit_vectors, vectors


def close(a, b, tol=EPS_ALG):
    return all(abs(x - y) <= tol for x, y in zip(tuple(a), tuple(b)))


def test_split_examples():
    s = split(Vector3(1, 2, 0), UNIT_I)
    assert s.parallel == Vector3(1, 0, 0)
    assert s.perpendicular == Vector3(0, 2, 0)

    nu = UnitVector3.normalize(Vector3(2, -1, 2))
    v = nu.direction * 3
    s = split(v, nu)
    assert close(s.parallel, v) and close(s.perpendicular, (0, 0, 0))

    v = Vector3(1, 2, 0)
    s = split(v, UnitVector3.normalize(Vector3(-2, 1, 7)))
    assert close(s.parallel, (0, 0, 0)) and close(s.perpendicular, v)


@given(vectors(), unit_vectors())
def test_split_matches_dot_product_projection(v, nu):
    d = nu.direction
    par = d * v.dot(d)
    s = split(v, nu)
    assert close(s.parallel, par)
    assert close(s.perpendicular, v - par)
    assert close(s.parallel + s.perpendicular, v, EPS_RECON * 10)
    assert abs(s.perpendicular.dot(d)) <= EPS_ALG
    assert s.parallel.cross(d).length() <= EPS_ALG


@given(vectors(), unit_vectors())
def test_split_is_idempotent(v, nu):
    par = split(v, nu).parallel
    again = split(par, nu)
    assert again.perpendicular.length() <= EPS_ALG
    assert close(again.parallel, par)


def test_split_quaternion_examples():
    par, perp = split_quaternion(Quaternion(1, 2, 3), UNIT_I)
    assert par == Quaternion(1, 2) and perp == Vector3(0, 3, 0)

    par, perp = split_quaternion(Quaternion(4.5), UNIT_I)
    assert par == Quaternion(4.5) and perp == Vector3()

    par, perp = split_quaternion(Quaternion(0, 0, 3), UNIT_I)
    assert par == Quaternion() and perp == Vector3(0, 3, 0)


@given(quaternions(), unit_vectors())
def test_split_quaternion_reconstructs(q, nu):
    par, perp = split_quaternion(q, nu)
    assert isinstance(perp, Vector3)
    assert close(par + perp, q, 1e-13)
    assert abs(perp.dot(nu.direction)) <= EPS_ALG
    assert par.w == pytest.approx(q.w, abs=1e-13)
    assert par.vector.cross(nu.direction).length() <= EPS_ALG


def test_scalar_and_vector_parts_examples():
    assert scalar_and_vector_parts(Quaternion(1, 2, 3, 4)) == (1, Vector3(2, 3, 4))
    assert scalar_and_vector_parts(Quaternion()) == (0, Vector3())
    v = Vector3(-1.25, 0.5, 9)
    assert scalar_and_vector_parts(v) == (0, v)


@given(quaternions())
def test_scalar_and_vector_parts_exact(q):
    a, v = scalar_and_vector_parts(q)
    assert a == q.w and v == q.vector


def test_decompose_examples():
    d = decompose(Quaternion(1, 2, 3, 4), CANONICAL_TRIAD)
    assert d.coefficients == (1, 2, 3, 4)
    t = complete_triad(UnitVector3.normalize(Vector3(3, -1, 2)))
    d = decompose(Quaternion(-7), t)
    assert d.coefficients == (-7, 0, 0, 0)
    with pytest.raises(InvalidTriadError):
        decompose(Quaternion(1), None)


@given(quaternions(), triads())
def test_decompose_reconstructs(q, t):
    d = decompose(q, t)
    assert close(d.reconstruct(), q, EPS_RECON * 10)
    for nu, c in zip(t, (d.alpha, d.beta, d.gamma)):
        assert c == pytest.approx(q.vector.dot(nu.direction), abs=1e-12)


@given(quaternions(), quaternions(), triads())
def test_decompose_is_linear(q1, q2, t):
    d1, d2, d12 = decompose(q1, t), decompose(q2, t), decompose(q1 + q2, t)
    assert close(d12.coefficients, [x + y for x, y in zip(d1.coefficients, d2.coefficients)], 1e-12)
