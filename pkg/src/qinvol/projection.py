"""Parallel/perpendicular resolution and triad decomposition via involutions."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Quaternion, UnitVector3, Vector3, as_quaternion, conjugate, dot
from .involutions import (
    AxisLike,
    InvalidTriadError,
    OrthonormalTriad,
    involute,
)


@dataclass(frozen=True, slots=True)
class ParallelPerpSplit:
    parallel: Vector3
    perpendicular: Vector3

    def __iter__(self):
        yield self.parallel
        yield self.perpendicular


@dataclass(frozen=True, slots=True)
class BasisDecomposition:
    """Coefficients of q = a + nu1*alpha + nu2*beta + nu3*gamma."""

    a: float
    alpha: float
    beta: float
    gamma: float
    triad: OrthonormalTriad

    @property
    def coefficients(self) -> tuple[float, float, float, float]:
        return (self.a, self.alpha, self.beta, self.gamma)

    def reconstruct(self) -> Quaternion:
        n1, n2, n3 = (nu.direction for nu in self.triad)
        v = n1 * self.alpha + n2 * self.beta + n3 * self.gamma
        return Quaternion(self.a, v.x, v.y, v.z)


def split(v: Vector3, nu: AxisLike) -> ParallelPerpSplit:
    """Resolve ``v`` into components along and across ``nu``."""
    if isinstance(v, UnitVector3):
        v = v.direction
    r = involute(v, nu)
    return ParallelPerpSplit((v + r) * 0.5, (v - r) * 0.5)


def split_quaternion(q, nu: AxisLike) -> tuple[Quaternion, Vector3]:
    """Split ``q`` into its part in the Argand plane of ``nu`` and the rest.

    The first part keeps the scalar; the second is a pure vector
    perpendicular to ``nu``.
    """
    q = as_quaternion(q)
    r = involute(q, nu)
    return (q + r) * 0.5, ((q - r) * 0.5).vector


def scalar_and_vector_parts(q) -> tuple[float, Vector3]:
    q = as_quaternion(q)
    qc = conjugate(q)
    return ((q + qc) * 0.5).w, ((q - qc) * 0.5).vector


def decompose(q, t: OrthonormalTriad) -> BasisDecomposition:
    if not isinstance(t, OrthonormalTriad):
        raise InvalidTriadError(f"expected OrthonormalTriad, got {type(t).__name__}")
    a, b = scalar_and_vector_parts(q)
    coeffs = []
    for nu in t:
        b_i = split(b, nu).parallel
        # b_i is parallel to nu, so its dot with nu is the signed magnitude
        coeffs.append(dot(b_i, nu))
    return BasisDecomposition(a, *coeffs, triad=t)


__all__ = [
    "BasisDecomposition",
    "ParallelPerpSplit",
    "decompose",
    "scalar_and_vector_parts",
    "split",
    "split_quaternion",
]
