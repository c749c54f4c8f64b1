"""Deterministic generators for the point configurations under study.

Every generator is a pure function of its parameters (including the seed).
Generators whose coordinates come from transcendental curves are float-mode;
the random test-fodder generator is exact-mode.

The cone / spindle-torus / stacked-cones generators place points on circles
at seeded pseudo-random azimuths and re-randomize (bounded retries) until the
configuration passes general-position verification; degenerate placements on
those surfaces are measure zero, so the first attempt almost always succeeds.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .geom import (
    EXACT,
    FLOAT,
    DegenerateInputError,
    GeneralPositionError,
    Point,
    PointConfig,
    point2,
    point3,
)
from .predicates import DEFAULT_EPS, collinear, concyclic, verify_general_position

RETRY_BUDGET = 1000


def log_spiral(
    n: int, beta: float = 0.1, *, eps: float = DEFAULT_EPS, verify: bool = True
) -> PointConfig:
    """Planar points (e^(b*j) cos(b*j), e^(b*j) sin(b*j)) for j = 1..n.

    Rotating the whole curve by one step multiplies radii by e^b, a
    similarity, so any angle can be re-anchored at the first point. beta must
    be small enough for general position; the generator verifies and raises
    otherwise.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if beta <= 0:
        raise ValueError("beta must be positive")
    pts = []
    for j in range(1, n + 1):
        r = math.exp(beta * j)
        pts.append(point2(r * math.cos(beta * j), r * math.sin(beta * j)))
    config = PointConfig(tuple(pts), FLOAT, f"log_spiral(n={n}, beta={beta})")
    if verify:
        report = verify_general_position(config, eps)
        if not report.is_general_position:
            raise GeneralPositionError(
                f"log_spiral(n={n}, beta={beta}) is degenerate at eps={eps}; "
                f"use a smaller beta ({report.summary()})",
                report,
            )
    return config


def cyl_helix(n: int) -> PointConfig:
    """Points (cos(2*pi*j/n), sin(2*pi*j/n), j/n) for j = 1..n on a helix."""
    if n < 3:
        raise ValueError("need n >= 3")
    pts = [
        point3(
            math.cos(2.0 * math.pi * j / n),
            math.sin(2.0 * math.pi * j / n),
            j / n,
        )
        for j in range(1, n + 1)
    ]
    return PointConfig(tuple(pts), FLOAT, f"cyl_helix(n={n})")


def conchospiral(
    n: int, beta: float = 0.1, *, eps: float = DEFAULT_EPS, verify: bool = True
) -> PointConfig:
    """Points (e^(b*j) cos(b*j), e^(b*j) sin(b*j), e^(b*j)) for j = 1..n.

    The planar projection is the logarithmic spiral; index shift acts as a
    rotation plus dilation, again a similarity.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if beta <= 0:
        raise ValueError("beta must be positive")
    pts = []
    for j in range(1, n + 1):
        r = math.exp(beta * j)
        pts.append(point3(r * math.cos(beta * j), r * math.sin(beta * j), r))
    config = PointConfig(tuple(pts), FLOAT, f"conchospiral(n={n}, beta={beta})")
    if verify:
        report = verify_general_position(config, eps)
        if not report.is_general_position:
            raise GeneralPositionError(
                f"conchospiral(n={n}, beta={beta}) is degenerate at eps={eps}; "
                f"use a smaller beta ({report.summary()})",
                report,
            )
    return config


def _retry_general_position(build, label, eps, max_retries):
    """Call ``build(attempt)`` until the result verifies; raise on exhaustion."""
    report = None
    last = "coincident points"
    for attempt in range(max_retries):
        try:
            config = build(attempt)
        except DegenerateInputError:
            continue  # coincident sample; redraw
        report = verify_general_position(config, eps)
        if report.is_general_position:
            return config
        last = report.summary()
    raise GeneralPositionError(
        f"{label}: no general-position placement in {max_retries} attempts "
        f"(last attempt: {last})",
        report,
    )


def cone_config(
    n: int,
    alpha: float,
    seed: int = 0,
    *,
    eps: float = DEFAULT_EPS,
    max_retries: int = RETRY_BUDGET,
) -> PointConfig:
    """A at (0,0,1), B at the origin, and n-2 points on the cone of rays from
    B at angle alpha to the ray BA.

    Every angle (A, B, P) then equals alpha. Radii grow geometrically (ratio
    3/2) to sidestep accidental concyclicity; azimuths are seeded random.
    alpha = pi/2 degenerates the cone to the plane z = 0.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if not 0 < alpha < math.pi:
        raise ValueError("alpha must lie strictly between 0 and pi")
    rng = random.Random(seed)
    sin_a, cos_a = math.sin(alpha), math.cos(alpha)

    def build(attempt):
        pts = [point3(0.0, 0.0, 1.0), point3(0.0, 0.0, 0.0)]
        for i in range(n - 2):
            r = 1.5**i
            phi = rng.uniform(0.0, 2.0 * math.pi)
            pts.append(
                point3(r * sin_a * math.cos(phi), r * sin_a * math.sin(phi), r * cos_a)
            )
        return PointConfig(
            tuple(pts), FLOAT, f"cone_config(n={n}, alpha={alpha}, seed={seed})"
        )

    return _retry_general_position(
        build, f"cone_config(n={n}, alpha={alpha})", eps, max_retries
    )


def spindle_torus_config(
    n: int,
    alpha: float,
    seed: int = 0,
    *,
    eps: float = DEFAULT_EPS,
    max_retries: int = RETRY_BUDGET,
) -> PointConfig:
    """A at the origin, B at (0,0,1), and n-2 points seeing AB at angle alpha.

    The locus is swept by rotating the circular arc through A and B that
    subtends alpha (inscribed-angle theorem) about the AB axis: a spindle
    torus for alpha != pi/2 and the sphere of diameter AB for alpha = pi/2.
    Arc positions and azimuths are seeded random.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if not 0 < alpha < math.pi:
        raise ValueError("alpha must lie strictly between 0 and pi")
    rng = random.Random(seed)
    sin_a, cos_a = math.sin(alpha), math.cos(alpha)
    big_r = 1.0 / (2.0 * sin_a)  # circumradius of the arc through A and B

    def build(attempt):
        pts = [point3(0.0, 0.0, 0.0), point3(0.0, 0.0, 1.0)]
        for _ in range(n - 2):
            # arc parameter: A and B sit at +-(pi - alpha); points in between
            # see the chord AB under the inscribed angle alpha
            psi = rng.uniform(-0.95, 0.95) * (math.pi - alpha)
            phi = rng.uniform(0.0, 2.0 * math.pi)
            rho = (cos_a + math.cos(psi)) / (2.0 * sin_a)
            z = 0.5 + big_r * math.sin(psi)
            pts.append(point3(rho * math.cos(phi), rho * math.sin(phi), z))
        return PointConfig(
            tuple(pts),
            FLOAT,
            f"spindle_torus_config(n={n}, alpha={alpha}, seed={seed})",
        )

    return _retry_general_position(
        build, f"spindle_torus_config(n={n}, alpha={alpha})", eps, max_retries
    )


def cones_valid_sizes(limit: int = 10) -> list[int]:
    """The point counts accepted by cones_construction: n = 3*s^2 + 2, s odd."""
    return [3 * s * s + 2 for s in range(1, 2 * limit, 2)]


def cones_construction(
    n: int,
    seed: int = 0,
    *,
    eps: float = DEFAULT_EPS,
    max_retries: int = RETRY_BUDGET,
) -> PointConfig:
    """Two stacked families of coaxial cones realizing few pinned-pair angles.

    A at the origin and B at (0,0,1); s cone apertures in arithmetic
    progression over [5*pi/18, 7*pi/18] are raised from A (opening toward B)
    and congruently from B (opening toward A). Each of the s^2 cone pairs
    intersects in an axis-centered circle carrying exactly 3 points, so
    n = 3*s^2 + 2 with s odd (the progression then contains pi/3). The
    angles involving both A and B form one arithmetic progression of
    2*s - 1 values.
    """
    q, rem = divmod(n - 2, 3)
    s = math.isqrt(q) if q >= 0 else 0
    if rem != 0 or s * s != q or s % 2 == 0:
        near = min(cones_valid_sizes(), key=lambda v: abs(v - n))
        raise ValueError(
            f"n={n} invalid: need n = 3*s^2 + 2 with s odd "
            f"(5, 29, 77, 149, 245, ...); nearest valid n is {near}"
        )
    rng = random.Random(seed)
    lo, hi = 5.0 * math.pi / 18.0, 7.0 * math.pi / 18.0
    if s == 1:
        thetas = [math.pi / 3.0]
    else:
        step = (hi - lo) / (s - 1)
        thetas = [lo + i * step for i in range(s)]
    tans = [math.tan(t) for t in thetas]

    def build(attempt):
        pts = [point3(0.0, 0.0, 0.0), point3(0.0, 0.0, 1.0)]
        for ti in tans:
            for tj in tans:
                z = tj / (ti + tj)
                r = z * ti
                for _ in range(3):
                    phi = rng.uniform(0.0, 2.0 * math.pi)
                    pts.append(point3(r * math.cos(phi), r * math.sin(phi), z))
        return PointConfig(
            tuple(pts), FLOAT, f"cones_construction(n={n}, seed={seed})"
        )

    return _retry_general_position(
        build, f"cones_construction(n={n})", eps, max_retries
    )


def sunshine(m: int, exponent_base: float = 2.0) -> PointConfig:
    """The origin plus an m x m polar grid: radius base^a on ray 2*pi*c/m.

    Deliberately *not* in general position: each ray carries the origin plus
    m points. Geometric radii keep the angles with the origin as an endpoint
    linear in the point count rather than n^(3/2).
    """
    if m < 3:
        raise ValueError("need m >= 3 rays (fewer collapse to one line)")
    if exponent_base <= 1.0:
        raise ValueError("exponent_base must exceed 1")
    pts = [point2(0.0, 0.0)]
    for a in range(m):
        r = float(exponent_base) ** a
        for c in range(m):
            theta = 2.0 * math.pi * c / m
            pts.append(point2(r * math.cos(theta), r * math.sin(theta)))
    return PointConfig(
        tuple(pts), FLOAT, f"sunshine(m={m}, base={exponent_base})"
    )


def sunshine_ray_indices(m: int) -> list[list[int]]:
    """Point indices on each of the m rays (origin included on every ray)."""
    return [[0] + [1 + a * m + c for a in range(m)] for c in range(m)]


def random_general_position(n: int, dim: int, seed: int = 0) -> PointConfig:
    """Random exact-rational points, rejection-sampled to general position.

    Coordinates are random integers over the denominator 2^12; every accepted
    point is exactly non-collinear with all pairs and non-concyclic with all
    triples already placed. Deterministic for a fixed seed.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if dim not in (2, 3):
        raise ValueError("dim must be 2 or 3")
    rng = random.Random(seed)
    den = 1 << 12
    span = 1 << 23

    def draw() -> Point:
        coords = [Fraction(rng.randint(-span, span), den) for _ in range(dim)]
        if dim == 2:
            return point2(*coords)
        return point3(*coords)

    accepted: list[Point] = []
    while len(accepted) < n:
        cand = draw()
        if any(p == cand for p in accepted):
            continue
        ok = True
        for i in range(len(accepted)):
            for j in range(i + 1, len(accepted)):
                if collinear(accepted[i], accepted[j], cand):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for i in range(len(accepted)):
                for j in range(i + 1, len(accepted)):
                    for k in range(j + 1, len(accepted)):
                        if concyclic(accepted[i], accepted[j], accepted[k], cand):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
        if ok:
            accepted.append(cand)
    return PointConfig(
        tuple(accepted),
        EXACT,
        f"random_general_position(n={n}, dim={dim}, seed={seed})",
    )
