"""Collinearity, concyclicity, and general-position verification.

A configuration is in general position when no three points lie on a line
and no four lie on a circle. Exact-mode tests are exact: denominators are
cleared by a uniform scaling (which preserves incidence) and everything runs
in arbitrary-precision integers. Float-mode tests use relative tolerances:

* collinear: every component of (q-p) x (r-p) within eps * |q-p||r-p|;
* concyclic: coplanarity determinant within eps * |u||v||w|, then the
  in-plane circumcenter O of the first three points, with
  | |s-O|^2 - r^2 | within eps * max(|s-O|^2, r^2).

The default eps of 1e-9 separates genuine degeneracies from roundoff for the
bundled generators at the sizes this package targets.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from ._backend import kernels
from ._triples import split_ranges
from .angles import _idot, _int_diffs
from .geom import (
    EXACT,
    DegenerateInputError,
    Point,
    PointConfig,
    check_same_mode,
    points_coincide,
)

DEFAULT_EPS = 1e-9


@dataclass(frozen=True)
class ViolationReport:
    """Every collinear triple and concyclic quadruple found in a config."""

    collinear_triples: list[tuple[int, int, int]] = field(default_factory=list)
    concyclic_quadruples: list[tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def is_general_position(self) -> bool:
        return not self.collinear_triples and not self.concyclic_quadruples

    def summary(self) -> str:
        return (
            f"{len(self.collinear_triples)} collinear triple(s), "
            f"{len(self.concyclic_quadruples)} concyclic quadruple(s)"
        )


def _require_distinct(*points: Point) -> None:
    for p, q in combinations(points, 2):
        if points_coincide(p, q):
            raise DegenerateInputError("coincident input points")


def collinear(p: Point, q: Point, r: Point, eps: float = DEFAULT_EPS) -> bool:
    """True when p, q, r lie on one line."""
    mode = check_same_mode(p, q, r)
    _require_distinct(p, q, r)
    if mode == EXACT:
        u, v = _int_diffs(p, q, r)
        return (
            u[1] * v[2] - u[2] * v[1] == 0
            and u[2] * v[0] - u[0] * v[2] == 0
            and u[0] * v[1] - u[1] * v[0] == 0
        )
    ux, uy, uz = q.x - p.x, q.y - p.y, q.z - p.z
    vx, vy, vz = r.x - p.x, r.y - p.y, r.z - p.z
    scale = eps * (
        math.sqrt(ux * ux + uy * uy + uz * uz)
        * math.sqrt(vx * vx + vy * vy + vz * vz)
    )
    return (
        abs(uy * vz - uz * vy) <= scale
        and abs(uz * vx - ux * vz) <= scale
        and abs(ux * vy - uy * vx) <= scale
    )


def _circumcenter_cleared(u, v):
    """Circumcenter of the triangle (0, u, v) over integer vectors.

    Returns (w, dd) with center = w / dd exactly; dd is twice the Gram
    determinant and is nonzero iff u, v are linearly independent.
    """
    uu, vv, uv = _idot(u, u), _idot(v, v), _idot(u, v)
    g = uu * vv - uv * uv
    c1 = vv * (uu - uv)
    c2 = uu * (vv - uv)
    w = tuple(c1 * u[i] + c2 * v[i] for i in range(3))
    return w, 2 * g


def concyclic(p: Point, q: Point, r: Point, s: Point, eps: float = DEFAULT_EPS) -> bool:
    """True when all four points lie on one circle.

    The contract is: the four points are coplanar and s lies on the
    circumcircle of p, q, r. The first three must not be collinear (the
    circumcircle would be undefined).
    """
    mode = check_same_mode(p, q, r, s)
    _require_distinct(p, q, r, s)
    if collinear(p, q, r, eps):
        raise DegenerateInputError("first three points are collinear")
    if mode == EXACT:
        u, v, w = _int_diffs(p, q, r, s)
        det = (
            (u[1] * v[2] - u[2] * v[1]) * w[0]
            + (u[2] * v[0] - u[0] * v[2]) * w[1]
            + (u[0] * v[1] - u[1] * v[0]) * w[2]
        )
        if det != 0:
            return False
        center_num, dd = _circumcenter_cleared(u, v)
        # |s - O|^2 == |p - O|^2  <=>  dd*|w|^2 - 2 w.center_num == 0
        return dd * _idot(w, w) - 2 * _idot(w, center_num) == 0
    ux, uy, uz = q.x - p.x, q.y - p.y, q.z - p.z
    vx, vy, vz = r.x - p.x, r.y - p.y, r.z - p.z
    wx, wy, wz = s.x - p.x, s.y - p.y, s.z - p.z
    uu = ux * ux + uy * uy + uz * uz
    vv = vx * vx + vy * vy + vz * vz
    nu, nv = math.sqrt(uu), math.sqrt(vv)
    det = (
        (uy * vz - uz * vy) * wx
        + (uz * vx - ux * vz) * wy
        + (ux * vy - uy * vx) * wz
    )
    if abs(det) > eps * (nu * nv * math.sqrt(wx * wx + wy * wy + wz * wz)):
        return False
    uv = ux * vx + uy * vy + uz * vz
    g = uu * vv - uv * uv
    s1 = vv * (uu - uv) / (2.0 * g)
    s2 = uu * (vv - uv) / (2.0 * g)
    ox = s1 * ux + s2 * vx
    oy = s1 * uy + s2 * vy
    oz = s1 * uz + s2 * vz
    r2 = ox * ox + oy * oy + oz * oz
    dx, dy, dz = wx - ox, wy - oy, wz - oz
    d2 = dx * dx + dy * dy + dz * dz
    return abs(d2 - r2) <= eps * (d2 if d2 > r2 else r2)


def _verify_exact(config: PointConfig) -> ViolationReport:
    pts = config.points
    n = len(pts)
    collinear_triples = [
        t for t in combinations(range(n), 3) if collinear(*(pts[i] for i in t))
    ]
    collinear_set = set(collinear_triples)
    concyclic_quads = []
    for quad in combinations(range(n), 4):
        if any(t in collinear_set for t in combinations(quad, 3)):
            continue
        i, j, k, l = quad
        if concyclic(pts[i], pts[j], pts[k], pts[l]):
            concyclic_quads.append(quad)
    return ViolationReport(collinear_triples, concyclic_quads)


def verify_general_position(
    config: PointConfig, eps: float = DEFAULT_EPS, threads: int = 1
) -> ViolationReport:
    """Exhaustive O(n^3) collinearity and O(n^4) concyclicity scan.

    Violations are reported exhaustively with ascending indices. Quadruples
    containing an already-reported collinear triple are not re-reported as
    circles. Configs with fewer than 3 points come back clean.
    """
    n = len(config.points)
    if n < 3:
        return ViolationReport()
    if config.mode == EXACT:
        return _verify_exact(config)
    coords = config.float_coords()
    triples, mask = kernels.collinear_scan(coords, eps)
    if threads <= 1 or n < 24:
        quads = kernels.concyclic_scan(coords, eps, mask, 0, n)
    else:
        quads = []
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(kernels.concyclic_scan, coords, eps, mask, lo, hi)
                for lo, hi in split_ranges(n, 4 * threads)
            ]
            for fut in futures:
                quads.extend(fut.result())
    return ViolationReport(
        [tuple(t) for t in triples], [tuple(quadruple) for quadruple in quads]
    )
