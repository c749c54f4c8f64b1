"""Canonical angle identity.

The angle at vertex ``b`` between rays toward ``a`` and ``c`` lies in
[0, pi].  Because theta -> (sign cos theta, cos^2 theta) is injective there,
an exact-mode angle is identified by that pair, which is rational whenever
the coordinates are: with d = (a-b).(c-b),

    key = (sign d,  d^2 / (|a-b|^2 |c-b|^2)).

Float-mode coordinates (helix, spirals, ...) have no rational key; angle
identity there is the cluster class of the cosine value under single-linkage
clustering with a gap threshold eps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .geom import (
    EXACT,
    FLOAT,
    DegenerateInputError,
    ModeMismatchError,
    Point,
    check_same_mode,
    points_coincide,
)


class ExactAngleKey(NamedTuple):
    """Identity of an angle with rational coordinates: (sign of cos, cos^2)."""

    cos_sign: int
    cos_sq: Fraction


class FloatAngleKey(NamedTuple):
    """Identity of a clustered float-mode angle."""

    class_id: int
    representative_cosine: float


AngleKey = ExactAngleKey | FloatAngleKey


@dataclass(frozen=True)
class ClusterStats:
    """Diagnostics of one clustering pass.

    ``min_gap_between_classes`` is the smallest sorted-value gap that
    *separated* two classes (inf when fewer than two classes);
    ``max_spread_within_class`` is the largest extent of a single class,
    which can exceed eps through chaining.
    """

    eps: float
    num_classes: int
    min_gap_between_classes: float
    max_spread_within_class: float


def _require_window(a: Point, b: Point, c: Point) -> None:
    if points_coincide(b, a) or points_coincide(b, c):
        raise DegenerateInputError("angle vertex coincides with an endpoint")


def _int_diffs(base: Point, *others: Point) -> list[tuple[int, int, int]]:
    """Integer difference vectors (p - base) after clearing denominators.

    Multiplying all differences by the common denominator is a uniform
    scaling, which preserves every quantity we derive from them (signs,
    cos^2 ratios, zero tests), while keeping the arithmetic in plain ints.
    """
    coords = [base.coords()] + [p.coords() for p in others]
    lcm = 1
    for row in coords:
        for v in row:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    scaled = [
        tuple(v.numerator * (lcm // v.denominator) for v in row) for row in coords
    ]
    b = scaled[0]
    return [tuple(p[i] - b[i] for i in range(3)) for p in scaled[1:]]


def _idot(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def angle_cosine(a: Point, b: Point, c: Point) -> float:
    """Cosine of the angle at vertex b, clamped to [-1, 1]. Float mode only.

    Exact mode has no rational cosine (square roots); use
    :func:`angle_key_exact` there instead.
    """
    mode = check_same_mode(a, b, c)
    if mode == EXACT:
        raise ModeMismatchError(
            "angle_cosine is float-mode only; use angle_key_exact for exact points"
        )
    _require_window(a, b, c)
    ux, uy, uz = a.x - b.x, a.y - b.y, a.z - b.z
    vx, vy, vz = c.x - b.x, c.y - b.y, c.z - b.z
    nu = math.sqrt(ux * ux + uy * uy + uz * uz)
    nv = math.sqrt(vx * vx + vy * vy + vz * vz)
    cosv = (ux * vx + uy * vy + uz * vz) / (nu * nv)
    return min(1.0, max(-1.0, cosv))


def angle_key_exact(a: Point, b: Point, c: Point) -> ExactAngleKey:
    """Exact canonical key of the angle at vertex b. Exact mode only."""
    mode = check_same_mode(a, b, c)
    if mode == FLOAT:
        raise ModeMismatchError(
            "angle_key_exact needs exact coordinates; cluster float cosines instead"
        )
    _require_window(a, b, c)
    u, v = _int_diffs(b, a, c)
    d = _idot(u, v)
    sign = (d > 0) - (d < 0)
    cos_sq = Fraction(d * d, _idot(u, u) * _idot(v, v))
    return ExactAngleKey(sign, cos_sq)


def angle_equal_poly(
    a: Point, b: Point, c: Point, d: Point, e: Point, f: Point
):
    """Polynomial witness for cos^2(angle abc) == cos^2(angle def).

    Returns ((a-b).(c-b))^2 |d-e|^2 |f-e|^2 - ((d-e).(f-e))^2 |a-b|^2 |c-b|^2,
    exact in exact mode.  Zero is necessary but not sufficient for angle
    equality: squaring discards the cosine sign, which must be compared
    separately.
    """
    mode = check_same_mode(a, b, c, d, e, f)
    if points_coincide(b, a) or points_coincide(b, c):
        raise DegenerateInputError("first window is degenerate")
    if points_coincide(e, d) or points_coincide(e, f):
        raise DegenerateInputError("second window is degenerate")
    if mode == FLOAT:
        u, v = b - a, b - c
        w, t = e - d, e - f
        duv = u.x * v.x + u.y * v.y + u.z * v.z
        dwt = w.x * t.x + w.y * t.y + w.z * t.z
        nu = u.x * u.x + u.y * u.y + u.z * u.z
        nv = v.x * v.x + v.y * v.y + v.z * v.z
        nw = w.x * w.x + w.y * w.y + w.z * w.z
        nt = t.x * t.x + t.y * t.y + t.z * t.z
        return duv * duv * nw * nt - dwt * dwt * nu * nv
    # exact: clear denominators per window; both terms pick up the same
    # factor L1^4 * L2^4, divided back out at the end
    coords1 = (b.x, b.y, b.z, a.x, a.y, a.z, c.x, c.y, c.z)
    coords2 = (e.x, e.y, e.z, d.x, d.y, d.z, f.x, f.y, f.z)
    l1 = 1
    for vcoord in coords1:
        l1 = l1 * vcoord.denominator // math.gcd(l1, vcoord.denominator)
    l2 = 1
    for vcoord in coords2:
        l2 = l2 * vcoord.denominator // math.gcd(l2, vcoord.denominator)
    u, v = _int_diffs(b, a, c)
    w, t = _int_diffs(e, d, f)
    duv, dwt = _idot(u, v), _idot(w, t)
    value = duv * duv * _idot(w, w) * _idot(t, t) - dwt * dwt * _idot(u, u) * _idot(
        v, v
    )
    return Fraction(value, (l1 * l1 * l2 * l2) ** 2)


def cluster_angles(
    cosines: Sequence[float] | np.ndarray, eps: float
) -> tuple[np.ndarray, ClusterStats]:
    """Single-linkage clustering of cosine values on the sorted axis.

    A new class starts wherever the gap between consecutive sorted values
    exceeds eps; chains of sub-eps gaps stay in one class, so a class can be
    wider than eps (the stats expose when that happens).  Class ids are
    assigned in ascending value order, making the assignment independent of
    the input order.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    values = np.asarray(cosines, dtype=np.float64)
    if values.ndim != 1:
        raise ValueError("cosines must be one-dimensional")
    if values.size == 0:
        return (
            np.empty(0, dtype=np.int64),
            ClusterStats(eps, 0, math.inf, 0.0),
        )
    if values.min() < -1.0 or values.max() > 1.0:
        raise ValueError("cosine values must lie in [-1, 1]")
    order = np.argsort(values, kind="stable")
    svals = values[order]
    gaps = np.diff(svals)
    breaks = gaps > eps
    class_of_sorted = np.concatenate(([0], np.cumsum(breaks)))
    assignment = np.empty(values.size, dtype=np.int64)
    assignment[order] = class_of_sorted
    num_classes = int(class_of_sorted[-1]) + 1
    min_gap = float(gaps[breaks].min()) if breaks.any() else math.inf
    starts = np.flatnonzero(np.concatenate(([True], breaks)))
    ends = np.concatenate((starts[1:] - 1, [values.size - 1]))
    max_spread = float((svals[ends] - svals[starts]).max())
    return assignment, ClusterStats(eps, num_classes, min_gap, max_spread)
