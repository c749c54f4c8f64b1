"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines. Criterion 11 includes a clause that is geometrically unattainable for
this construction (see the companion test, which pins down the true
violation set); it is implemented as stated and expected to stay red.
"""

import itertools
import math
import random
import time
from fractions import Fraction as F

import numpy as np
import pytest

from anglekit import (
    PinSpec,
    PointConfig,
    angle_equal_poly,
    angle_histogram,
    angle_key_exact,
    cauchy_schwarz_check,
    cone_config,
    cones_construction,
    conchospiral,
    count_chains,
    count_distinct_angles,
    count_pinned,
    cyl_helix,
    find_self_similar_points,
    log_spiral,
    pinned_center_via_sphere,
    point3,
    random_general_position,
    run_sweep,
    fit_loglog,
    spindle_torus_config,
    sunshine,
    verify_general_position,
)
from anglekit.constructions import sunshine_ray_indices

EPS = 1e-9

HELIX_SIZES = (10, 20, 30, 40)
CONCHO_SIZES = (10, 20, 30)
PLANAR_FLOOR_SEEDS = range(50)
SPHERE_CASES = [(2, 100 + i) for i in range(10)] + [(3, 200 + i) for i in range(10)]


def report(criterion, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
    assert ok, f"criterion {criterion}: {detail}"


@pytest.fixture(scope="module")
def pool():
    """Configs shared across criteria (7 and 9 re-check every one of these)."""
    configs = {}
    for n in HELIX_SIZES:
        configs[f"helix{n}"] = cyl_helix(n)
    for n in CONCHO_SIZES:
        configs[f"concho{n}"] = conchospiral(n, 0.1)
    configs["cones29"] = cones_construction(29, seed=0)
    configs["cones77"] = cones_construction(77, seed=0)
    configs["cone20"] = cone_config(20, math.pi / 4, seed=0)
    configs["spindle20"] = spindle_torus_config(20, math.pi / 3, seed=0)
    configs["spindle20_right"] = spindle_torus_config(20, math.pi / 2, seed=0)
    for seed in PLANAR_FLOOR_SEEDS:
        configs[f"rand20_{seed}"] = random_general_position(20, 2, seed=seed)
    for dim, seed in SPHERE_CASES:
        configs[f"rand10_{dim}d_{seed}"] = random_general_position(10, dim, seed=seed)
    return configs


def test_criterion_01_helix_upper_bound(pool):
    ratios = []
    gap_margin = math.inf  # smallest observed min_gap/eps: eps health check
    for n in HELIX_SIZES:
        start = time.perf_counter()
        hist = angle_histogram(pool[f"helix{n}"], EPS)
        elapsed = time.perf_counter() - start
        cap = 3 * math.comb(n - 1, 2)
        assert hist.distinct <= cap, f"helix n={n}: {hist.distinct} > {cap}"
        assert elapsed < 5.0, f"helix n={n} took {elapsed:.2f}s"
        ratios.append(hist.distinct / math.comb(n - 1, 2))
        gap_margin = min(gap_margin, hist.cluster_stats.min_gap_between_classes / EPS)
    assert all(r <= 3.0 for r in ratios)
    assert gap_margin > 1.0
    non_increasing = all(a >= b for a, b in zip(ratios, ratios[1:]))
    report(
        1,
        non_increasing,
        f"helix counts within 3*C(n-1,2); ratios {[round(r, 4) for r in ratios]} "
        f"non-increasing; min_gap/eps >= {gap_margin:.3g}",
    )


def test_criterion_02_conchospiral_upper_bound(pool):
    ratios = []
    gap_margin = math.inf
    for n in CONCHO_SIZES:
        start = time.perf_counter()
        hist = angle_histogram(pool[f"concho{n}"], EPS)
        elapsed = time.perf_counter() - start
        cap = 3 * math.comb(n - 1, 2)
        assert hist.distinct <= cap, f"conchospiral n={n}: {hist.distinct} > {cap}"
        assert elapsed < 5.0
        ratios.append(hist.distinct / math.comb(n - 1, 2))
        gap_margin = min(gap_margin, hist.cluster_stats.min_gap_between_classes / EPS)
    assert all(r <= 3.0 for r in ratios)
    assert gap_margin > 1.0
    non_increasing = all(a >= b for a, b in zip(ratios, ratios[1:]))
    report(
        2,
        non_increasing,
        f"conchospiral counts within 3*C(n-1,2); ratios "
        f"{[round(r, 4) for r in ratios]}; min_gap/eps >= {gap_margin:.3g}",
    )


def test_criterion_03_two_pin_tightness(pool):
    pin = PinSpec("pair_all_roles", 0, 1)
    got29 = count_pinned(pool["cones29"], pin, EPS)
    got77 = count_pinned(pool["cones77"], pin, EPS)
    clean29 = verify_general_position(pool["cones29"], EPS).is_general_position
    clean77 = verify_general_position(pool["cones77"], EPS).is_general_position
    ok = got29 == 5 and got77 == 9 and clean29 and clean77
    report(
        3,
        ok,
        f"two-pin counts 29->{got29} (want 5), 77->{got77} (want 9); "
        f"general position {clean29}/{clean77}",
    )


def test_criterion_04_degenerate_surfaces(pool):
    ec = count_pinned(pool["cone20"], PinSpec("endpoint_center", 0, 1), EPS)
    ee = count_pinned(pool["spindle20"], PinSpec("endpoints", 0, 1), EPS)
    center = np.array([0.0, 0.0, 0.5])
    coords = pool["spindle20_right"].float_coords()[2:]
    thales_dev = float(np.abs(np.linalg.norm(coords - center, axis=1) - 0.5).max())
    ok = ec == 1 and ee == 1 and thales_dev <= 1e-12
    report(
        4,
        ok,
        f"cone endpoint_center={ec}, spindle endpoints={ee}, "
        f"Thales deviation {thales_dev:.2e} <= 1e-12",
    )


def test_criterion_05_planar_pinned_floor(pool):
    floor = (20 - 2) // 2
    failures = []
    for seed in PLANAR_FLOOR_SEEDS:
        cfg = pool[f"rand20_{seed}"]
        ec = count_pinned(cfg, PinSpec("endpoint_center", 0, 1))
        ee = count_pinned(cfg, PinSpec("endpoints", 0, 1))
        if ec < floor or ee < floor:
            failures.append((seed, ec, ee))
    report(
        5,
        not failures,
        f"50 seeds of random planar n=20: pinned counts >= {floor} "
        f"({len(failures)} failures)",
    )


def test_criterion_06_center_count_equals_sphere_distances(pool):
    mismatches = []
    for dim, seed in SPHERE_CASES:
        cfg = pool[f"rand10_{dim}d_{seed}"]
        direct = count_pinned(cfg, PinSpec("center", 0), EPS)
        via_sphere = pinned_center_via_sphere(cfg, 0, EPS)
        if direct != via_sphere:
            mismatches.append((dim, seed, direct, via_sphere))
    report(
        6,
        not mismatches,
        f"20 random configs (2D and 3D): pinned-center count equals "
        f"sphere-projection distance count ({len(mismatches)} mismatches)",
    )


def test_criterion_07_energy_machinery(pool):
    bad = []
    for name, cfg in pool.items():
        n = len(cfg.points)
        hist = angle_histogram(cfg, EPS)
        total_ok = sum(hist.entries.values()) == n * (n - 1) * (n - 2)
        even_ok = all(v % 2 == 0 for v in hist.entries.values())
        _, holds = cauchy_schwarz_check(hist)
        if not (total_ok and even_ok and holds and hist.total_triples == n * (n - 1) * (n - 2)):
            bad.append(name)
    report(
        7,
        not bad,
        f"{len(pool)} configs: triple totals exact, every N_alpha even, "
        f"Cauchy-Schwarz bound holds ({len(bad)} offenders)",
    )


def test_criterion_08_polynomial_oracle_equivalence():
    rng = random.Random(2024)

    def window():
        while True:
            pts = [
                point3(F(rng.randint(-12, 12), 4), F(rng.randint(-12, 12), 4),
                       F(rng.randint(-12, 12), 4))
                for _ in range(3)
            ]
            if pts[0].coords() != pts[1].coords() and pts[2].coords() != pts[1].coords():
                return pts

    disagreements = 0
    for _ in range(1000):
        a, b, c = window()
        d, e, f = window()
        poly_zero = angle_equal_poly(a, b, c, d, e, f) == 0
        k1 = angle_key_exact(a, b, c)
        k2 = angle_key_exact(d, e, f)
        if (poly_zero and k1.cos_sign == k2.cos_sign) != (k1 == k2):
            disagreements += 1
    report(
        8,
        disagreements == 0,
        f"1000 random rational sextuples: polynomial+sign vs exact keys, "
        f"{disagreements} disagreements",
    )


def test_criterion_09_chains(pool):
    mismatched = [
        name
        for name, cfg in pool.items()
        if count_chains(cfg, 1, EPS) != count_distinct_angles(cfg, EPS)
    ]
    square = PointConfig(
        (point3(F(0), F(0), F(0)), point3(F(1), F(0), F(0)),
         point3(F(1), F(1), F(0)), point3(F(0), F(1), F(0))),
        "exact",
        "unit square",
    )
    windowed = count_chains(square, 2)
    distinct_only = count_chains(square, 2, all_distinct=True)
    spiral12 = count_chains(log_spiral(12, 0.1), 2, EPS)
    ok = (
        not mismatched
        and windowed == 4
        and distinct_only == 2
        and spiral12 <= (2 * 12 - 1) ** 3
    )
    report(
        9,
        ok,
        f"k=1 equals distinct count on {len(pool)} configs "
        f"({len(mismatched)} mismatches); square k=2: {windowed}/4 windowed, "
        f"{distinct_only}/2 all-distinct; spiral12 k=2: {spiral12} <= 12167",
    )


def test_criterion_10_self_similarity():
    results = {}
    for name, cfg in (
        ("log_spiral", log_spiral(10, 0.1)),
        ("cyl_helix", cyl_helix(10)),
        ("conchospiral", conchospiral(10, 0.1)),
    ):
        points = find_self_similar_points(cfg, EPS)
        n = len(cfg.points)
        cap_ok = (
            count_distinct_angles(cfg, EPS) <= 3 * math.comb(n - 1, 2)
            if points
            else True
        )
        results[name] = (points, cap_ok)
    ok = all(points and cap_ok for points, cap_ok in results.values())
    report(
        10,
        ok,
        "self-similar points found for spiral/helix/conchospiral "
        f"({ {k: v[0] for k, v in results.items()} }), caps hold",
    )


def test_criterion_11a_sunshine_pinned_endpoint_cap():
    cfg = sunshine(5)
    count = count_pinned(cfg, PinSpec("endpoint", 0), EPS)
    report(
        "11a",
        count <= 2 * 25 + 2,
        f"sunshine(5) origin-endpoint distinct angles {count} <= 52",
    )


def test_criterion_11b_sunshine_collinear_exactly_per_ray():
    cfg = sunshine(5)
    rep = verify_general_position(cfg, EPS)
    expected = set()
    for ray in sunshine_ray_indices(5):
        expected.update(itertools.combinations(sorted(ray), 3))
    got = set(rep.collinear_triples)
    report(
        "11b",
        got == expected,
        f"sunshine(5) collinear triples: got {len(got)}, "
        f"expected the {len(expected)} per-ray triples, equal={got == expected}",
    )


def test_criterion_11c_sunshine_no_concyclic():
    # As specified this cannot pass: the radius-2^a circles each carry five
    # grid points, and mirror-symmetric grid quadruples (two radii x two
    # rays) are concyclic as well -- see notes in the companion test below.
    cfg = sunshine(5)
    rep = verify_general_position(cfg, EPS)
    report(
        "11c",
        len(rep.concyclic_quadruples) == 0,
        f"sunshine(5): expected no concyclic quadruples, found "
        f"{len(rep.concyclic_quadruples)} (geometrically unavoidable; "
        "see tests below and the project notes)",
    )


def _planar_circumcenter(p, q, r):
    """Perpendicular-bisector intersection; independent of the library path."""
    (ax, ay), (bx, by), (cx, cy) = p, q, r
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay)
          + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx)
          + (cx * cx + cy * cy) * (bx - ax)) / d
    return ux, uy


def test_criterion_11_companion_true_violation_set():
    """The honest version of 11c: the report matches an independent oracle.

    sunshine(5) genuinely contains concyclic quadruples: any four grid points
    of one radius circle, and any mirror-symmetric quadruple (two radii on
    two rays) such as (1,0deg),(1,144deg),(2,0deg),(2,144deg). The scan must
    find exactly the oracle's violations, no more, no fewer.
    """
    cfg = sunshine(5)
    rep = verify_general_position(cfg, EPS)
    coords = cfg.float_coords()[:, :2]
    collinear_set = set(rep.collinear_triples)
    expected = set()
    for quad in itertools.combinations(range(len(coords)), 4):
        if any(t in collinear_set for t in itertools.combinations(quad, 3)):
            continue
        i, j, k, l = quad
        ox, oy = _planar_circumcenter(coords[i], coords[j], coords[k])
        r2 = (coords[i][0] - ox) ** 2 + (coords[i][1] - oy) ** 2
        d2 = (coords[l][0] - ox) ** 2 + (coords[l][1] - oy) ** 2
        if abs(d2 - r2) <= EPS * max(d2, r2):
            expected.add(quad)
    got = set(rep.concyclic_quadruples)
    assert got == expected, (
        f"scan and oracle disagree: {len(got)} vs {len(expected)}"
    )
    # the structural families are both present
    radius_circle_quads = {
        q for q in expected
        if len({(idx - 1) // 5 for idx in q}) == 1 and 0 not in q
    }
    assert len(radius_circle_quads) == 5 * math.comb(5, 4)
    print(
        f"[INFO] criterion 11 companion: sunshine(5) truly has {len(expected)} "
        f"concyclic quadruples ({len(radius_circle_quads)} on radius circles); "
        "scan matches the independent oracle exactly"
    )


def test_criterion_12_scaling_probe():
    start = time.perf_counter()
    rows = run_sweep("cyl_helix", [20, 30, 40, 50, 60], ["distinct_angles"], eps=EPS)
    elapsed = time.perf_counter() - start
    fit = fit_loglog(rows)
    ok = 1.7 <= fit.slope <= 2.1 and fit.r_squared >= 0.98 and elapsed < 120.0
    report(
        12,
        ok,
        f"helix distinct-angle growth: slope {fit.slope:.3f} in [1.7, 2.1], "
        f"r^2 {fit.r_squared:.4f} >= 0.98, sweep {elapsed:.1f}s < 120s",
    )
