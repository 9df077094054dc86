"""Randomized verification of the algebraic laws.

Each law draws ``trials`` random cases from a seeded ``random.Random`` and
reports the worst residual seen. Residuals are measured as the largest
component difference divided by max(1, |lhs|, |rhs|), so they are relative
for large values and absolute near zero.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .core import (
    EPS_ALG,
    EPS_RECON,
    Quaternion,
    UnitVector3,
    Vector3,
    conjugate,
    from_scalar_vector,
    inverse,
    modulus,
    mul,
    to_scalar_vector,
)
from .involutions import (
    OrthonormalTriad,
    compose_involutions,
    conjugate_via_involutions,
    involute,
    involute_about_triad_product,
)
from .projection import decompose, scalar_and_vector_parts, split

COMPONENT_RANGE = 10.0
MIN_AXIS_ANGLE = 1e-6


@dataclass
class LawResult:
    name: str
    passed: bool
    residual: float
    tolerance: float
    # law holds by exhibiting a counterexample rather than by a bound
    expects_witness: bool = False
    witness: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        if self.expects_witness:
            found = "counterexample found" if self.witness else "no counterexample"
            detail = f"{found} (expected)"
            if self.witness:
                detail += f": {self.witness}"
            return f"{status}  {self.name}: {detail}"
        return (f"{status}  {self.name}: worst residual {self.residual:.3e} "
                f"(tol {self.tolerance:.0e})")


@dataclass
class VerificationReport:
    results: list[LawResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]


# -- independent oracles -----------------------------------------------------

def _odot(u, v) -> float:
    a, b = tuple(u), tuple(v)
    return sum(a[n] * b[n] for n in range(3))


def _ocross(u, v) -> tuple[float, float, float]:
    a, b = tuple(u), tuple(v)
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def rotate_axis_angle(v, axis, angle: float) -> tuple[float, float, float]:
    """Rodrigues rotation of ``v`` by ``angle`` about unit ``axis``."""
    v = tuple(v)
    k = tuple(axis)
    c, s = math.cos(angle), math.sin(angle)
    kv = _odot(k, v)
    kxv = _ocross(k, v)
    return tuple(v[n] * c + kxv[n] * s + k[n] * kv * (1 - c) for n in range(3))


def residual(lhs, rhs) -> float:
    a, b = tuple(lhs), tuple(rhs)
    diff = max(abs(p - q) for p, q in zip(a, b))
    scale = max(1.0, math.sqrt(sum(p * p for p in a)), math.sqrt(sum(q * q for q in b)))
    return diff / scale


def abs_residual(lhs, rhs) -> float:
    return max(abs(p - q) for p, q in zip(tuple(lhs), tuple(rhs)))


# -- generators --------------------------------------------------------------

def random_quaternion(rng: random.Random, r: float = COMPONENT_RANGE) -> Quaternion:
    return Quaternion(*(rng.uniform(-r, r) for _ in range(4)))


def random_vector(rng: random.Random, r: float = COMPONENT_RANGE) -> Vector3:
    return Vector3(*(rng.uniform(-r, r) for _ in range(3)))


def random_unit(rng: random.Random) -> UnitVector3:
    while True:
        v = Vector3(rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1))
        if v.length() > 1e-3:
            return UnitVector3.normalize(v)


def random_triad(rng: random.Random) -> OrthonormalTriad:
    """Canonical triad carried through a uniformly random rotation."""
    while True:
        r = Quaternion(*(rng.gauss(0, 1) for _ in range(4)))
        if modulus(r) > 1e-3:
            break
    r = r / modulus(r)
    rc = conjugate(r)
    axes = [UnitVector3.normalize(mul(mul(r, e), rc).vector)
            for e in (Vector3(1, 0, 0), Vector3(0, 1, 0), Vector3(0, 0, 1))]
    return OrthonormalTriad(*axes)


def random_perpendicular(rng: random.Random, nu: UnitVector3) -> UnitVector3:
    while True:
        v = random_vector(rng, 1.0)
        v = v - nu.direction * _odot(v, nu)
        if v.length() > 1e-3:
            return UnitVector3.normalize(v)


def random_axis_pair(rng: random.Random, lo: float = 0.01,
                     hi: float = math.pi - 0.01) -> tuple[UnitVector3, UnitVector3, float]:
    """Two unit axes whose angle is drawn uniformly from [lo, hi]."""
    a = random_unit(rng)
    perp = random_perpendicular(rng, a)
    theta = rng.uniform(lo, hi)
    b = UnitVector3.normalize(a.direction * math.cos(theta) + perp.direction * math.sin(theta))
    return a, b, theta


# -- laws --------------------------------------------------------------------

Law = Callable[[random.Random, int], LawResult]
LAWS: list[Law] = []


def law(fn: Law) -> Law:
    LAWS.append(fn)
    return fn


def _bound(name: str, residuals: Iterable[float], tol: float) -> LawResult:
    worst = max(residuals, default=0.0)
    return LawResult(name, worst < tol, worst, tol)


@law
def unit_square(rng, n):
    def cases():
        for _ in range(n):
            nu = random_unit(rng)
            yield residual(mul(nu, nu), Quaternion(-1.0))
    return _bound("unit vector squares to -1", cases(), EPS_ALG)


@law
def vector_product_parts(rng, n):
    def cases():
        for _ in range(n):
            u, v = random_vector(rng), random_vector(rng)
            p = mul(u, v)
            expected = (-_odot(u, v),) + _ocross(u, v)
            yield residual(p, expected)
    return _bound("vector product = -dot + cross", cases(), EPS_ALG)


@law
def product_swap_conjugates(rng, n):
    def cases():
        for _ in range(n):
            u, v = random_vector(rng), random_vector(rng)
            yield residual(mul(v, u), conjugate(mul(u, v)))
    return _bound("swapped vector product is the conjugate", cases(), EPS_ALG)


@law
def perpendicular_anticommute(rng, n):
    def cases():
        for _ in range(n):
            u = random_unit(rng)
            v = random_perpendicular(rng, u)
            yield residual(mul(u, v), -mul(v, u))
    return _bound("perpendicular vectors anticommute", cases(), EPS_ALG)


@law
def norm_multiplicative(rng, n):
    def cases():
        for _ in range(n):
            p, q = random_quaternion(rng), random_quaternion(rng)
            lhs, rhs = modulus(mul(p, q)), modulus(p) * modulus(q)
            yield abs(lhs - rhs) / max(1.0, rhs)
    return _bound("modulus is multiplicative", cases(), EPS_ALG)


@law
def inverse_law(rng, n):
    def cases():
        for _ in range(n):
            q = random_quaternion(rng)
            if modulus(q) < 1e-3:
                continue
            yield residual(mul(q, inverse(q)), Quaternion(1.0))
    return _bound("q q^-1 = 1", cases(), EPS_ALG)


@law
def scalar_vector_roundtrip(rng, n):
    def cases():
        for _ in range(n):
            q = random_quaternion(rng)
            yield abs_residual(from_scalar_vector(to_scalar_vector(q)), q)
    return _bound("scalar-vector form round trip", cases(), EPS_RECON)


@law
def unit_product_angle(rng, n):
    def cases():
        for _ in range(n):
            u, v, theta = random_axis_pair(rng)
            nhat = UnitVector3.normalize(_ocross(u, v))
            expected = (-math.cos(theta),) + tuple(c * math.sin(theta) for c in nhat)
            yield residual(mul(u, v), expected)
    return _bound("unit product = -cos(theta) + n sin(theta)", cases(), EPS_ALG)


@law
def axiom_self_inverse(rng, n):
    def cases():
        for _ in range(n):
            q, nu = random_quaternion(rng), random_unit(rng)
            yield residual(involute(involute(q, nu), nu), q)
    return _bound("axiom 1: involution is self-inverse", cases(), EPS_ALG)


@law
def axiom_linear(rng, n):
    def cases():
        for _ in range(n):
            q1, q2, nu = random_quaternion(rng), random_quaternion(rng), random_unit(rng)
            lam = rng.uniform(-COMPONENT_RANGE, COMPONENT_RANGE)
            yield residual(involute(q1 + q2, nu), involute(q1, nu) + involute(q2, nu))
            yield residual(involute(q1 * lam, nu), involute(q1, nu) * lam)
    return _bound("axiom 2: involution is linear", cases(), EPS_ALG)


@law
def axiom_multiplicative(rng, n):
    def cases():
        for _ in range(n):
            q1, q2, nu = random_quaternion(rng), random_quaternion(rng), random_unit(rng)
            yield residual(involute(mul(q1, q2), nu), mul(involute(q1, nu), involute(q2, nu)))
    return _bound("axiom 3: involution is multiplicative (same order)", cases(), EPS_ALG)


@law
def conjugate_anti_involution(rng, n):
    def cases():
        for _ in range(n):
            q1, q2 = random_quaternion(rng), random_quaternion(rng)
            yield residual(conjugate(mul(q1, q2)), mul(conjugate(q2), conjugate(q1)))
    return _bound("conjugate reverses products", cases(), EPS_ALG)


@law
def conjugate_same_order_fails(rng, n):
    for _ in range(n):
        q1, q2 = random_quaternion(rng), random_quaternion(rng)
        r = residual(conjugate(mul(q1, q2)), mul(conjugate(q1), conjugate(q2)))
        if r > EPS_ALG:
            return LawResult("conjugate is not multiplicative in the same order",
                             True, r, EPS_ALG, True, f"q1={_fmt(q1)} q2={_fmt(q2)}")
    return LawResult("conjugate is not multiplicative in the same order",
                     False, 0.0, EPS_ALG, True)


def find_two_sided_witness(rng: random.Random, trials: int = 100):
    """Search for q1, q2, nu1 != nu2 with nu1 (q1 q2) nu2 != (nu1 q1 nu2)(nu1 q2 nu2)."""
    for _ in range(trials):
        nu1, nu2 = random_unit(rng), random_unit(rng)
        if abs_residual(nu1, nu2) < 1e-6:
            continue
        q1, q2 = random_quaternion(rng), random_quaternion(rng)

        def f(q):
            return mul(mul(nu1, q), nu2)

        r = residual(f(mul(q1, q2)), mul(f(q1), f(q2)))
        if r > EPS_ALG:
            return q1, q2, nu1, nu2, r
    return None


@law
def two_sided_map_not_involution(rng, n):
    name = "q->nu1 q nu2 multiplicativity"
    hit = find_two_sided_witness(rng, min(n, 100))
    if hit is None:
        return LawResult(name, False, 0.0, EPS_ALG, True)
    q1, q2, nu1, nu2, r = hit
    return LawResult(name, True, r, EPS_ALG, True,
                     f"q1={_fmt(q1)} q2={_fmt(q2)} nu1={_fmt(nu1)} nu2={_fmt(nu2)}")


@law
def perpendicular_commute(rng, n):
    def cases():
        for _ in range(n):
            q = random_quaternion(rng)
            a = random_unit(rng)
            b = random_perpendicular(rng, a)
            yield residual(compose_involutions(q, a, b), compose_involutions(q, b, a))
    return _bound("perpendicular involutions commute", cases(), EPS_ALG)


@law
def double_composition(rng, n):
    def cases():
        for _ in range(n):
            q, t = random_quaternion(rng), random_triad(rng)
            yield residual(compose_involutions(q, t.nu1, t.nu2), involute(q, t.nu3))
    return _bound("double composition gives third involution", cases(), EPS_ALG)


@law
def triple_composition(rng, n):
    def cases():
        for _ in range(n):
            q, t = random_quaternion(rng), random_triad(rng)
            yield residual(involute_about_triad_product(q, t), q)
    return _bound("triple composition is the identity", cases(), EPS_ALG)


@law
def scalar_and_modulus_preserved(rng, n):
    def cases():
        for _ in range(n):
            q, nu = random_quaternion(rng), random_unit(rng)
            r = involute(q, nu)
            yield abs(r.w - q.w) / max(1.0, abs(q.w))
            yield abs(modulus(r) - modulus(q)) / max(1.0, modulus(q))
    return _bound("involution keeps scalar part and modulus", cases(), EPS_ALG)


@law
def reflection_in_line(rng, n):
    def cases():
        for _ in range(n):
            v, nu = random_vector(rng), random_unit(rng)
            k = 2 * _odot(v, nu)
            expected = tuple(k * c - p for c, p in zip(nu, v))
            yield residual(involute(v, nu), expected)
    return _bound("involution reflects vectors in its axis", cases(), EPS_ALG)


@law
def three_involution_negation(rng, n):
    def cases():
        for _ in range(n):
            v, t = random_vector(rng), random_triad(rng)
            total = involute(v, t.nu1) + involute(v, t.nu2) + involute(v, t.nu3)
            yield residual(total, -v)
    return _bound("three perpendicular involutions negate a vector", cases(), EPS_ALG)


@law
def conjugate_identity(rng, n):
    def cases():
        for _ in range(n):
            q, t = random_quaternion(rng), random_triad(rng)
            yield residual(conjugate_via_involutions(q, t), conjugate(q))
    return _bound("conjugate from three involutions", cases(), EPS_ALG)


@law
def rotation_law(rng, n):
    def cases():
        for _ in range(n):
            a, b, theta = random_axis_pair(rng)
            v = random_vector(rng)
            axis = UnitVector3.normalize(_ocross(a, b))
            expected = rotate_axis_angle(v, axis, 2 * theta)
            yield residual(compose_involutions(v, a, b), expected)
    return _bound("two involutions rotate by twice the axis angle", cases(), 1e-8)


@law
def projection_split(rng, n):
    def cases():
        for _ in range(n):
            v, nu = random_vector(rng), random_unit(rng)
            s = split(v, nu)
            k = _odot(v, nu)
            par = tuple(k * c for c in nu)
            perp = tuple(p - q for p, q in zip(v, par))
            yield residual(s.parallel, par)
            yield residual(s.perpendicular, perp)
            yield abs_residual(s.parallel + s.perpendicular, v)
            yield abs(_odot(s.perpendicular, nu))
    return _bound("split matches dot-product projection", cases(), 1e-10)


@law
def projection_idempotent(rng, n):
    def cases():
        for _ in range(n):
            v, nu = random_vector(rng), random_unit(rng)
            par = split(v, nu).parallel
            again = split(par, nu)
            yield abs_residual(again.perpendicular, (0.0, 0.0, 0.0))
            yield residual(again.parallel, par)
    return _bound("split is idempotent on the parallel part", cases(), EPS_ALG)


@law
def scalar_vector_parts_exact(rng, n):
    def cases():
        for _ in range(n):
            q = random_quaternion(rng)
            a, v = scalar_and_vector_parts(q)
            yield 0.0 if (a, *v) == q.as_tuple() else math.inf
    return _bound("scalar/vector parts from conjugate are exact", cases(), EPS_ALG)


@law
def decomposition_roundtrip(rng, n):
    def cases():
        for _ in range(n):
            q, t = random_quaternion(rng), random_triad(rng)
            d = decompose(q, t)
            yield abs_residual(d.reconstruct(), q)
            _, b = scalar_and_vector_parts(q)
            for nu, c in zip(t, (d.alpha, d.beta, d.gamma)):
                yield abs(c - _odot(b, nu))
    return _bound("triad decomposition reconstructs q", cases(), 1e-10)


def _fmt(v) -> str:
    return "(" + ",".join(repr(c) for c in tuple(v)) + ")"


def run_all(trials: int, seed: int) -> VerificationReport:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    report = VerificationReport()
    for fn in LAWS:
        # one stream per law so adding a law does not reshuffle the others
        rng = random.Random(f"{seed}:{fn.__name__}")
        report.results.append(fn(rng, trials))
    return report
