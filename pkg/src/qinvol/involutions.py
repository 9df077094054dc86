"""The involution family q -> -nu q nu and the laws built from it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import (
    EPS_ALG,
    EPS_UNIT,
    UNIT_I,
    UNIT_J,
    UNIT_K,
    Quaternion,
    UnitVector3,
    Vector3,
    as_quaternion,
    dot,
    mul,
)


class InvalidTriadError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class InvolutionAxis:
    axis: UnitVector3

    def __post_init__(self):
        if not isinstance(self.axis, UnitVector3):
            object.__setattr__(self, "axis", UnitVector3(self.axis))


AxisLike = Union[InvolutionAxis, UnitVector3]


def _axis(nu: AxisLike) -> UnitVector3:
    if isinstance(nu, InvolutionAxis):
        return nu.axis
    if isinstance(nu, UnitVector3):
        return nu
    raise TypeError(f"expected a unit axis, got {type(nu).__name__}")


@dataclass(frozen=True, slots=True)
class OrthonormalTriad:
    """Right-handed triad of mutually perpendicular unit vectors, nu1 nu2 = nu3."""

    nu1: UnitVector3
    nu2: UnitVector3
    nu3: UnitVector3

    def __post_init__(self):
        pairs = ((self.nu1, self.nu2), (self.nu1, self.nu3), (self.nu2, self.nu3))
        for a, b in pairs:
            d = dot(a, b)
            if abs(d) > EPS_UNIT:
                raise InvalidTriadError(f"axes {a.as_tuple()} and {b.as_tuple()} "
                                        f"are not perpendicular (dot {d!r})")
        p = mul(self.nu1, self.nu2)
        r = p - self.nu3.quaternion
        if max(abs(c) for c in r) > EPS_ALG:
            raise InvalidTriadError("triad is not right-handed: nu1 nu2 != nu3")

    def __iter__(self):
        yield self.nu1
        yield self.nu2
        yield self.nu3


CANONICAL_TRIAD = OrthonormalTriad(UNIT_I, UNIT_J, UNIT_K)


def involute(q, nu: AxisLike):
    """Apply the involution about axis ``nu``: ``-nu q nu``.

    A Vector3 argument gives back a Vector3 (the scalar part of the
    result is zero in exact arithmetic and is dropped).
    """
    n = _axis(nu).quaternion
    if isinstance(q, (Vector3, UnitVector3)):
        return (-mul(mul(n, q.quaternion), n)).vector
    return -mul(mul(n, as_quaternion(q)), n)


def chernov_alpha(q) -> Quaternion:
    return involute(q, UNIT_I)


def chernov_beta(q) -> Quaternion:
    return involute(q, UNIT_J)


def chernov_gamma(q) -> Quaternion:
    return involute(q, UNIT_K)


def compose_involutions(q, nu_a: AxisLike, nu_b: AxisLike):
    """Involute about ``nu_a`` first, then about ``nu_b``.

    For axes at angle theta this rotates the vector part of ``q`` by
    2*theta about cross(nu_a, nu_b) and leaves the scalar part alone.
    """
    return involute(involute(q, nu_a), nu_b)


def involute_about_triad_product(q, t: OrthonormalTriad):
    # Three perpendicular involutions in sequence; the identity up to rounding.
    if not isinstance(t, OrthonormalTriad):
        raise InvalidTriadError(f"expected OrthonormalTriad, got {type(t).__name__}")
    for nu in t:
        q = involute(q, nu)
    return q


def conjugate_via_involutions(q, t: OrthonormalTriad) -> Quaternion:
    """Conjugate of ``q`` from involutions about the three triad axes.

    Computes (q~nu1 + q~nu2 + q~nu3 - q) / 2.
    """
    if not isinstance(t, OrthonormalTriad):
        raise InvalidTriadError(f"expected OrthonormalTriad, got {type(t).__name__}")
    q = as_quaternion(q)
    total = involute(q, t.nu1) + involute(q, t.nu2) + involute(q, t.nu3)
    return (total - q) * 0.5


def complete_triad(nu1: UnitVector3) -> OrthonormalTriad:
    """Extend ``nu1`` to a right-handed orthonormal triad.

    nu2 comes from the coordinate axis least aligned with nu1 (ties go
    x, then y, then z), orthogonalized and normalized; nu3 is the vector
    part of nu1 nu2.
    """
    if isinstance(nu1, InvolutionAxis):
        nu1 = nu1.axis
    d = nu1.direction
    candidates = (UNIT_I, UNIT_J, UNIT_K)
    dots = [abs(dot(d, e)) for e in candidates]
    e = candidates[dots.index(min(dots))].direction
    v = e - d * dot(d, e)
    nu2 = UnitVector3.normalize(v)
    nu3 = UnitVector3.normalize(mul(nu1, nu2).vector)
    return OrthonormalTriad(nu1, nu2, nu3)


def reflect_vector(v: Vector3, nu: AxisLike) -> Vector3:
    """Reflect ``v`` in the line through the origin along ``nu``."""
    if isinstance(v, UnitVector3):
        v = v.direction
    return involute(v, nu)
