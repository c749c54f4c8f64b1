"""Scalars, points, and point configurations.

Coordinates live in one of two modes:

* ``exact``  -- arbitrary-precision rationals (``fractions.Fraction``),
* ``float``  -- IEEE binary64.

A mode is a property of a whole object (point or configuration), never of a
single coordinate, and arithmetic refuses to cross modes: mixing an exact
point with a float point is a caller bug and raises ``ModeMismatchError``.
2D data is embedded in 3D with a zero third coordinate so all downstream
counting code is dimension-agnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"

#: Two float-mode points are considered coincident when every coordinate
#: differs by at most this much.
COINCIDENCE_EPS = 1e-12


class GeometryError(Exception):
    """Base class for errors raised by this package."""


class ModeMismatchError(GeometryError):
    """Arithmetic attempted between exact-mode and float-mode objects."""


class DegenerateInputError(GeometryError):
    """Coincident or otherwise degenerate points where distinct ones are required."""


class GeneralPositionError(GeometryError):
    """A generator exhausted its retry budget without reaching general position.

    ``report`` carries the violations of the last attempt when available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def scalar_mode(value: Scalar) -> str:
    if isinstance(value, Fraction):
        return EXACT
    if isinstance(value, float):
        return FLOAT
    if isinstance(value, int):  # integers are exact rationals
        return EXACT
    raise TypeError(f"not a scalar: {value!r}")


def _coerce(values: Sequence) -> tuple:
    """Coerce raw coordinates to one common mode.

    ints promote to Fraction (exact) unless any float is present, in which
    case everything becomes float. Mixing Fraction with float is rejected.
    """
    has_float = any(isinstance(v, float) for v in values)
    has_frac = any(isinstance(v, Fraction) for v in values)
    if has_float and has_frac:
        raise ModeMismatchError(f"mixed exact/float coordinates: {values!r}")
    if has_float:
        return tuple(float(v) for v in values)
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True, slots=True)
class Point:
    """A point (or difference vector) in 2 or 3 dimensions.

    ``dim == 2`` requires ``z`` to be exactly zero. All three coordinates
    share one mode.
    """

    x: Scalar
    y: Scalar
    z: Scalar
    dim: int = 3

    def __post_init__(self):
        cx, cy, cz = _coerce((self.x, self.y, self.z))
        object.__setattr__(self, "x", cx)
        object.__setattr__(self, "y", cy)
        object.__setattr__(self, "z", cz)
        if self.dim not in (2, 3):
            raise ValueError(f"dim must be 2 or 3, got {self.dim}")
        if self.dim == 2 and cz != 0:
            raise ValueError(f"2D point with nonzero z: {cz!r}")

    @property
    def mode(self) -> str:
        return scalar_mode(self.x)

    def coords(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.x, self.y, self.z)

    def __sub__(self, other: "Point") -> "Point":
        check_same_mode(self, other)
        if self.dim != other.dim:
            raise ValueError("dimension mismatch in point subtraction")
        return Point(self.x - other.x, self.y - other.y, self.z - other.z, self.dim)

    def __repr__(self):
        return f"Point({self.x!r}, {self.y!r}, {self.z!r}, dim={self.dim})"


def point2(x: Scalar, y: Scalar) -> Point:
    zero = 0.0 if isinstance(x, float) or isinstance(y, float) else Fraction(0)
    return Point(x, y, zero, dim=2)


def point3(x: Scalar, y: Scalar, z: Scalar) -> Point:
    return Point(x, y, z, dim=3)


def check_same_mode(*points: Point) -> str:
    mode = points[0].mode
    for p in points[1:]:
        if p.mode != mode:
            raise ModeMismatchError(
                f"operation mixes {mode}-mode and {p.mode}-mode points"
            )
    return mode


def sub(p: Point, q: Point) -> Point:
    """Componentwise difference p - q (requires same dim and mode)."""
    return p - q


def dot(u: Point, v: Point) -> Scalar:
    check_same_mode(u, v)
    return u.x * v.x + u.y * v.y + u.z * v.z


def norm_sq(u: Point) -> Scalar:
    return u.x * u.x + u.y * u.y + u.z * u.z


def cross(u: Point, v: Point) -> Point:
    check_same_mode(u, v)
    return Point(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        u.x * v.y - u.y * v.x,
        3,
    )


def points_coincide(p: Point, q: Point) -> bool:
    """Mode-aware coincidence test (exact equality / all coords within 1e-12)."""
    mode = check_same_mode(p, q)
    if mode == EXACT:
        return p.x == q.x and p.y == q.y and p.z == q.z
    return (
        abs(p.x - q.x) <= COINCIDENCE_EPS
        and abs(p.y - q.y) <= COINCIDENCE_EPS
        and abs(p.z - q.z) <= COINCIDENCE_EPS
    )


@dataclass(frozen=True)
class PointConfig:
    """An ordered collection of pairwise-distinct points in one mode."""

    points: tuple[Point, ...]
    mode: str
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if self.mode not in (EXACT, FLOAT):
            raise ValueError(f"unknown mode {self.mode!r}")
        pts = self.points
        if not pts:
            return
        dim = pts[0].dim
        for p in pts:
            if p.mode != self.mode:
                raise ModeMismatchError(
                    f"{p!r} is {p.mode}-mode inside a {self.mode}-mode config"
                )
            if p.dim != dim:
                raise ValueError("points of mixed dimension in one config")
        self._check_distinct()

    def _check_distinct(self):
        pts = self.points
        if self.mode == EXACT:
            seen = {}
            for i, p in enumerate(pts):
                key = p.coords()
                if key in seen:
                    raise DegenerateInputError(
                        f"points {seen[key]} and {i} coincide"
                    )
                seen[key] = i
        else:
            arr = self.float_coords()
            # pairwise max-coordinate difference; n is small enough for O(n^2)
            for i in range(len(pts)):
                d = np.abs(arr[i + 1 :] - arr[i]).max(axis=1)
                hits = np.nonzero(d <= COINCIDENCE_EPS)[0]
                if hits.size:
                    raise DegenerateInputError(
                        f"points {i} and {i + 1 + int(hits[0])} coincide "
                        f"(all coordinates within {COINCIDENCE_EPS})"
                    )

    @property
    def dim(self) -> int:
        if not self.points:
            raise ValueError("empty config has no dimension")
        return self.points[0].dim

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def float_coords(self) -> np.ndarray:
        """(n, 3) float64 array of the coordinates (exact values converted)."""
        return np.array(
            [[float(p.x), float(p.y), float(p.z)] for p in self.points],
            dtype=np.float64,
        )

    def drop_point(self, index: int) -> "PointConfig":
        pts = self.points[:index] + self.points[index + 1 :]
        return PointConfig(pts, self.mode, self.label)
