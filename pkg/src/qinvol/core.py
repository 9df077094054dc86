"""Quaternion and 3-vector value types with Hamilton-product arithmetic.

All values are immutable binary64 tuples. Constructors reject NaN and
infinities so every algebraic law stays assertable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

EPS_UNIT = 1e-10
EPS_ZERO = 1e-12
EPS_ALG = 1e-9
EPS_RECON = 1e-12

Real = Union[int, float]


class NonInvertibleError(ZeroDivisionError):
    """Raised when inverting (or normalizing) a zero element."""


def _finite(*values: Real) -> tuple[float, ...]:
    out = tuple(float(v) for v in values)
    for v in out:
        if not math.isfinite(v):
            raise ValueError(f"non-finite component: {v!r}")
    return out


@dataclass(frozen=True, slots=True)
class Quaternion:
    """Quaternion w + ix + jy + kz."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        w, x, y, z = _finite(self.w, self.x, self.y, self.z)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    def __iter__(self):
        yield self.w
        yield self.x
        yield self.y
        yield self.z

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    @property
    def scalar(self) -> float:
        return self.w

    @property
    def vector(self) -> Vector3:
        return Vector3(self.x, self.y, self.z)

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        if isinstance(other, Vector3):
            return self + other.quaternion
        if isinstance(other, (int, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (Quaternion, Vector3, int, float)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, Vector3):
            return mul(self, other.quaternion)
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        if isinstance(other, Vector3):
            return mul(other.quaternion, self)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w / other, self.x / other,
                              self.y / other, self.z / other)
        return NotImplemented

    def conjugate(self) -> Quaternion:
        return conjugate(self)

    def norm(self) -> float:
        return norm(self)

    def modulus(self) -> float:
        return modulus(self)

    def inverse(self) -> Quaternion:
        return inverse(self)


@dataclass(frozen=True, slots=True)
class Vector3:
    """Pure vector ix + jy + kz."""

    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        x, y, z = _finite(self.x, self.y, self.z)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    @property
    def quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.x, self.y, self.z)

    def __add__(self, other):
        if isinstance(other, Vector3):
            return Vector3(self.x + other.x, self.y + other.y, self.z + other.z)
        if isinstance(other, (Quaternion, int, float)):
            return self.quaternion + other
        return NotImplemented

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        if isinstance(other, (Vector3, Quaternion, int, float)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Vector3(-self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Vector3(self.x * other, self.y * other, self.z * other)
        if isinstance(other, Vector3):
            return mul(self.quaternion, other.quaternion)
        if isinstance(other, Quaternion):
            return mul(self.quaternion, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Vector3(self.x / other, self.y / other, self.z / other)
        return NotImplemented

    def dot(self, other: Vector3) -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: Vector3) -> Vector3:
        return Vector3(self.y * other.z - self.z * other.y,
                       self.z * other.x - self.x * other.z,
                       self.x * other.y - self.y * other.x)

    def length(self) -> float:
        return math.sqrt(self.dot(self))


@dataclass(frozen=True, slots=True)
class UnitVector3:
    """A vector of unit length, e.g. an axis of involution."""

    direction: Vector3

    def __post_init__(self):
        d = self.direction
        if not isinstance(d, Vector3):
            d = Vector3(*d)
            object.__setattr__(self, "direction", d)
        if abs(d.length() - 1.0) > EPS_UNIT:
            raise ValueError(f"not a unit vector (length {d.length()!r}): {d}")

    @classmethod
    def of(cls, x: Real, y: Real, z: Real) -> UnitVector3:
        return cls(Vector3(x, y, z))

    @classmethod
    def normalize(cls, v: Vector3 | tuple, tol: float | None = None) -> UnitVector3:
        """Scale ``v`` to unit length.

        With ``tol`` set, refuse vectors whose length is farther than
        ``tol`` from 1 (guards against passing e.g. a point instead of an
        axis).
        """
        if not isinstance(v, Vector3):
            v = Vector3(*v)
        n = v.length()
        if n <= EPS_ZERO:
            raise NonInvertibleError("cannot normalize a zero vector")
        if tol is not None and abs(n - 1.0) > tol:
            raise ValueError(f"vector length {n!r} is not within {tol} of 1")
        return cls(v / n)

    @property
    def x(self) -> float:
        return self.direction.x

    @property
    def y(self) -> float:
        return self.direction.y

    @property
    def z(self) -> float:
        return self.direction.z

    @property
    def quaternion(self) -> Quaternion:
        return self.direction.quaternion

    def __iter__(self):
        return iter(self.direction)

    def __neg__(self):
        return UnitVector3(-self.direction)

    def as_tuple(self) -> tuple[float, float, float]:
        return self.direction.as_tuple()


@dataclass(frozen=True, slots=True)
class ScalarVectorForm:
    """Polar-like split q = a + mu*b with b >= 0 and unit mu.

    ``mu`` is None exactly when the vector part vanishes (b <= EPS_ZERO);
    no direction is invented for that case.
    """

    a: float
    b: float
    mu: Optional[UnitVector3] = None

    def __post_init__(self):
        a, b = _finite(self.a, self.b)
        if b < 0:
            raise ValueError(f"vector modulus must be non-negative, got {b}")
        if (self.mu is None) != (b <= EPS_ZERO):
            raise ValueError("mu must be given iff b > EPS_ZERO")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


UNIT_I = UnitVector3.of(1, 0, 0)
UNIT_J = UnitVector3.of(0, 1, 0)
UNIT_K = UnitVector3.of(0, 0, 1)
ONE = Quaternion(1.0)


def as_quaternion(value) -> Quaternion:
    """Coerce reals, vectors and unit vectors into a Quaternion."""
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (Vector3, UnitVector3)):
        return value.quaternion
    if isinstance(value, (int, float)):
        return Quaternion(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a quaternion")


def mul(p, q) -> Quaternion:
    """Hamilton product ``p q`` (i^2 = j^2 = k^2 = ijk = -1)."""
    p = as_quaternion(p)
    q = as_quaternion(q)
    pw, px, py, pz = p.w, p.x, p.y, p.z
    qw, qx, qy, qz = q.w, q.x, q.y, q.z
    return Quaternion(
        pw * qw - px * qx - py * qy - pz * qz,
        pw * qx + px * qw + py * qz - pz * qy,
        pw * qy - px * qz + py * qw + pz * qx,
        pw * qz + px * qy - py * qx + pz * qw,
    )


def conjugate(q) -> Quaternion:
    q = as_quaternion(q)
    return Quaternion(q.w, -q.x, -q.y, -q.z)


def norm(q) -> float:
    """Sum of squared components (the square of the modulus)."""
    q = as_quaternion(q)
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z


def modulus(q) -> float:
    return math.sqrt(norm(q))


def inverse(q) -> Quaternion:
    q = as_quaternion(q)
    n = norm(q)
    if n <= EPS_ZERO:
        raise NonInvertibleError(f"quaternion {q} has no inverse")
    return conjugate(q) / n


def to_scalar_vector(q) -> ScalarVectorForm:
    q = as_quaternion(q)
    b = q.vector.length()
    if b <= EPS_ZERO:
        return ScalarVectorForm(q.w, b, None)
    return ScalarVectorForm(q.w, b, UnitVector3(q.vector / b))


def from_scalar_vector(f: ScalarVectorForm) -> Quaternion:
    if f.mu is None:
        return Quaternion(f.a)
    return Quaternion(f.a, f.mu.x * f.b, f.mu.y * f.b, f.mu.z * f.b)


def vector_product_decomposition(u, v) -> Quaternion:
    """Product of two vectors as quaternions: -(u.v) + u x v.

    Swapping the arguments conjugates the result.
    """
    if isinstance(u, UnitVector3):
        u = u.direction
    if isinstance(v, UnitVector3):
        v = v.direction
    return mul(u.quaternion, v.quaternion)


def dot(u, v) -> float:
    return u.x * v.x + u.y * v.y + u.z * v.z


def cross(u, v) -> Vector3:
    return Vector3(u.y * v.z - u.z * v.y,
                   u.z * v.x - u.x * v.z,
                   u.x * v.y - u.y * v.x)
