"""Exhaustive counting of distinct angles, pinned variants, chains, energy.

All counters run over ordered window-distinct triples (a, b, c): three
pairwise-distinct points with the angle vertex at b, n(n-1)(n-2) of them in a
full scan. Exact-mode configs get exact rational angle keys; float-mode
configs get one clustering of the collected cosines per counting question
(one *global* clustering for chains, so chain counting at k=1 coincides with
the plain distinct-angle count).

Counters never require general position: several interesting configurations
(cones, spindle tori, the sunshine set) are deliberately degenerate, so
validation is a separate, composable step in :mod:`anglekit.predicates`.
Collinear windows are legal angles here (cosine +-1).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from ._backend import kernels
from ._triples import ordered_triple_count, split_ranges, triple_index_arrays
from .angles import (
    AngleKey,
    ClusterStats,
    FloatAngleKey,
    angle_key_exact,
    cluster_angles,
)
from .geom import EXACT, DegenerateInputError, PointConfig, norm_sq

DEFAULT_EPS = 1e-9

PIN_KINDS = ("endpoint", "center", "endpoint_center", "endpoints", "pair_all_roles")


@dataclass(frozen=True)
class PinSpec:
    """Which triples to count: those containing designated points in designated roles.

    kind:
      endpoint(a)            triples (A, X, Y)
      center(a)              triples (X, A, Y)
      endpoint_center(a, b)  triples (A, B, Y)
      endpoints(a, b)        triples (A, X, B)
      pair_all_roles(a, b)   union of (A, B, Y), (B, A, Y) and (A, Y, B)
    """

    kind: str
    a: int
    b: int | None = None

    def __post_init__(self):
        if self.kind not in PIN_KINDS:
            raise ValueError(f"unknown pin kind {self.kind!r}; choose from {PIN_KINDS}")
        needs_b = self.kind not in ("endpoint", "center")
        if needs_b and self.b is None:
            raise ValueError(f"pin kind {self.kind!r} needs two point indices")
        if self.b is not None and self.b == self.a:
            raise ValueError("pinned indices must be distinct")

    def validate(self, n: int) -> None:
        for idx in (self.a, self.b):
            if idx is not None and not 0 <= idx < n:
                raise IndexError(f"pinned index {idx} out of range for {n} points")


@dataclass(frozen=True)
class AngleHistogram:
    """Counts of ordered triples per angle class (N_alpha by angle key)."""

    entries: dict[AngleKey, int]
    total_triples: int
    cluster_stats: ClusterStats | None = None

    @property
    def distinct(self) -> int:
        return len(self.entries)


def _triple_cosine_array(coords: np.ndarray, threads: int = 1) -> np.ndarray:
    n = coords.shape[0]
    out = np.empty(ordered_triple_count(n), dtype=np.float64)
    if out.size == 0:
        return out
    if threads <= 1 or n < 24:
        kernels.fill_triple_cosines(coords, out, 0, n)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(kernels.fill_triple_cosines, coords, out, lo, hi)
                for lo, hi in split_ranges(n, threads)
            ]
            for fut in futures:
                fut.result()
    return out


def _iter_vertex_pairs(n: int) -> Iterator[tuple[int, int, int]]:
    """(a, b, c) with vertex b and a < c: one representative per angle value."""
    for b in range(n):
        for a in range(n):
            if a == b:
                continue
            for c in range(a + 1, n):
                if c != b:
                    yield a, b, c


def angle_histogram(
    config: PointConfig, eps: float = DEFAULT_EPS, threads: int = 1
) -> AngleHistogram:
    """Histogram over all n(n-1)(n-2) ordered window-distinct triples."""
    n = len(config.points)
    if n < 3:
        return AngleHistogram({}, 0)
    total = ordered_triple_count(n)
    if config.mode == EXACT:
        pts = config.points
        entries: dict[AngleKey, int] = {}
        for a, b, c in _iter_vertex_pairs(n):
            key = angle_key_exact(pts[a], pts[b], pts[c])
            entries[key] = entries.get(key, 0) + 2  # (a,b,c) and (c,b,a)
        return AngleHistogram(entries, total)
    cosines = _triple_cosine_array(config.float_coords(), threads)
    assignment, stats = cluster_angles(cosines, eps)
    counts = np.bincount(assignment, minlength=stats.num_classes)
    sums = np.bincount(assignment, weights=cosines, minlength=stats.num_classes)
    entries = {
        FloatAngleKey(int(cid), float(sums[cid] / counts[cid])): int(counts[cid])
        for cid in range(stats.num_classes)
    }
    return AngleHistogram(entries, total, stats)


def count_distinct_angles(
    config: PointConfig, eps: float = DEFAULT_EPS, threads: int = 1
) -> int:
    """Number of distinct angle classes over all ordered triples."""
    return angle_histogram(config, eps, threads).distinct


def _pin_triples(n: int, pin: PinSpec) -> Iterator[tuple[int, int, int]]:
    a, b = pin.a, pin.b
    if pin.kind == "endpoint":
        for x in range(n):
            if x == a:
                continue
            for y in range(n):
                if y != a and y != x:
                    yield a, x, y
    elif pin.kind == "center":
        for x in range(n):
            if x == a:
                continue
            for y in range(x + 1, n):  # (x, a, y) and (y, a, x) coincide
                if y != a:
                    yield x, a, y
    elif pin.kind == "endpoint_center":
        for y in range(n):
            if y != a and y != b:
                yield a, b, y
    elif pin.kind == "endpoints":
        for x in range(n):
            if x != a and x != b:
                yield a, x, b
    else:  # pair_all_roles
        for y in range(n):
            if y != a and y != b:
                yield a, b, y
        for y in range(n):
            if y != a and y != b:
                yield b, a, y
        for y in range(n):
            if y != a and y != b:
                yield a, y, b


def _cos3(coords: np.ndarray, a: int, b: int, c: int) -> float:
    ux, uy, uz = coords[a] - coords[b]
    vx, vy, vz = coords[c] - coords[b]
    nu = np.sqrt(ux * ux + uy * uy + uz * uz)
    nv = np.sqrt(vx * vx + vy * vy + vz * vz)
    return float(min(1.0, max(-1.0, (ux * vx + uy * vy + uz * vz) / (nu * nv))))


def count_pinned_with_stats(
    config: PointConfig, pin: PinSpec, eps: float = DEFAULT_EPS
) -> tuple[int, ClusterStats | None]:
    """Distinct angle classes among the triples selected by ``pin``."""
    n = len(config.points)
    pin.validate(n)
    if n < 3:
        return 0, None
    if config.mode == EXACT:
        pts = config.points
        keys = {
            angle_key_exact(pts[x], pts[y], pts[z])
            for x, y, z in _pin_triples(n, pin)
        }
        return len(keys), None
    coords = config.float_coords()
    values = np.array(
        [_cos3(coords, x, y, z) for x, y, z in _pin_triples(n, pin)],
        dtype=np.float64,
    )
    if values.size == 0:
        return 0, None
    _, stats = cluster_angles(values, eps)
    return stats.num_classes, stats


def count_pinned(config: PointConfig, pin: PinSpec, eps: float = DEFAULT_EPS) -> int:
    return count_pinned_with_stats(config, pin, eps)[0]


def _exact_class_table(config: PointConfig) -> tuple[np.ndarray, list[AngleKey]]:
    n = len(config.points)
    pts = config.points
    table = np.full(n * n * n, -1, dtype=np.int32)
    key_ids: dict[AngleKey, int] = {}
    keys: list[AngleKey] = []
    for a, b, c in _iter_vertex_pairs(n):
        key = angle_key_exact(pts[a], pts[b], pts[c])
        cid = key_ids.get(key)
        if cid is None:
            cid = len(keys)
            key_ids[key] = cid
            keys.append(key)
        table[(a * n + b) * n + c] = cid
        table[(c * n + b) * n + a] = cid
    return table, keys


def _float_class_table(
    config: PointConfig, eps: float, threads: int
) -> tuple[np.ndarray, list[AngleKey], ClusterStats]:
    n = len(config.points)
    cosines = _triple_cosine_array(config.float_coords(), threads)
    assignment, stats = cluster_angles(cosines, eps)
    counts = np.bincount(assignment, minlength=stats.num_classes)
    sums = np.bincount(assignment, weights=cosines, minlength=stats.num_classes)
    keys = [
        FloatAngleKey(cid, float(sums[cid] / counts[cid]))
        for cid in range(stats.num_classes)
    ]
    a_arr, b_arr, c_arr = triple_index_arrays(n)
    table = np.full(n * n * n, -1, dtype=np.int32)
    table[(a_arr * n + b_arr) * n + c_arr] = assignment
    return table, keys, stats


def _class_table(config, eps, threads):
    if config.mode == EXACT:
        table, keys = _exact_class_table(config)
    else:
        table, keys, _ = _float_class_table(config, eps, threads)
    return table, keys


def chain_key_set(
    config: PointConfig,
    k: int,
    eps: float = DEFAULT_EPS,
    all_distinct: bool = False,
    threads: int = 1,
) -> set[tuple[AngleKey, ...]]:
    """The distinct k-tuples of angle classes realized by (k+2)-point chains.

    Chains need only window-distinctness: each consecutive window of three
    points is pairwise distinct, while repeats at tuple distance >= 3 are
    allowed. ``all_distinct=True`` switches to fully distinct tuples, which
    changes answers (the unit square has 4 window-distinct pair classes but
    only 2 fully-distinct ones).
    """
    if k < 1:
        raise ValueError("chain length k must be >= 1")
    n = len(config.points)
    if n < 3:
        return set()
    table, keys = _class_table(config, eps, threads)
    id_tuples = kernels.chain_keys(table, n, k, all_distinct)
    return {tuple(keys[cid] for cid in ids) for ids in id_tuples}


def count_chains_with_stats(
    config: PointConfig,
    k: int,
    eps: float = DEFAULT_EPS,
    all_distinct: bool = False,
    threads: int = 1,
) -> tuple[int, ClusterStats | None]:
    if k < 1:
        raise ValueError("chain length k must be >= 1")
    n = len(config.points)
    if n < 3:
        return 0, None
    if config.mode == EXACT:
        table, _ = _exact_class_table(config)
        stats = None
    else:
        table, _, stats = _float_class_table(config, eps, threads)
    return len(kernels.chain_keys(table, n, k, all_distinct)), stats


def count_chains(
    config: PointConfig,
    k: int,
    eps: float = DEFAULT_EPS,
    all_distinct: bool = False,
    threads: int = 1,
) -> int:
    """Number of distinct angle k-chains; k=1 equals count_distinct_angles."""
    return count_chains_with_stats(config, k, eps, all_distinct, threads)[0]


def energy(hist: AngleHistogram) -> int:
    """Sum over angle classes of the squared ordered-triple multiplicity."""
    return sum(count * count for count in hist.entries.values())


def cauchy_schwarz_check(hist: AngleHistogram) -> tuple[Fraction, bool]:
    """Lower bound (sum N)^2 / (sum N^2) on the class count and whether it holds.

    The triple total is the distinct-triple count n(n-1)(n-2): degenerate
    triples have no angle, so they never enter the histogram.
    """
    if not hist.entries:
        raise ValueError("empty histogram has no energy bound")
    total = sum(hist.entries.values())
    bound = Fraction(total * total, energy(hist))
    return bound, len(hist.entries) >= bound


def pinned_center_via_sphere(
    config: PointConfig, a_index: int, eps: float = DEFAULT_EPS
) -> int:
    """Distinct angles at center A, counted via unit-sphere projection.

    Every other point P maps to (P-A)/|P-A|; distinct central angles between
    projected pairs (equivalently great-circle distances) are clustered with
    eps. Contractually equal to count_pinned(center(A)).
    """
    n = len(config.points)
    if not 0 <= a_index < n:
        raise IndexError(f"index {a_index} out of range")
    if config.mode == EXACT:
        apt = config.points[a_index]
        for i, p in enumerate(config.points):
            if i != a_index and norm_sq(p - apt) == 0:
                raise DegenerateInputError(f"point {i} coincides with the center")
    coords = config.float_coords()
    rel = np.delete(coords, a_index, axis=0) - coords[a_index]
    norms = np.linalg.norm(rel, axis=1)
    if np.any(norms == 0.0):
        raise DegenerateInputError("a point coincides with the center")
    unit = rel / norms[:, None]
    if len(unit) < 2:
        return 0
    gram = unit @ unit.T
    iu, ju = np.triu_indices(len(unit), k=1)
    values = np.clip(gram[iu, ju], -1.0, 1.0)
    _, stats = cluster_angles(values, eps)
    return stats.num_classes


def find_self_similar_points(
    config: PointConfig, eps: float = DEFAULT_EPS, threads: int = 1
) -> list[int]:
    """Indices A such that every angle class has a realizing triple through A."""
    n = len(config.points)
    if n < 3:
        return []
    if config.mode == EXACT:
        pts = config.points
        key_ids: dict[AngleKey, int] = {}
        triples = []
        for a, b, c in _iter_vertex_pairs(n):
            key = angle_key_exact(pts[a], pts[b], pts[c])
            cid = key_ids.setdefault(key, len(key_ids))
            triples.append((a, b, c, cid))
        num_classes = len(key_ids)
        touched = np.zeros((n, num_classes), dtype=bool)
        for a, b, c, cid in triples:
            touched[a, cid] = True
            touched[b, cid] = True
            touched[c, cid] = True
    else:
        cosines = _triple_cosine_array(config.float_coords(), threads)
        assignment, stats = cluster_angles(cosines, eps)
        num_classes = stats.num_classes
        a_arr, b_arr, c_arr = triple_index_arrays(n)
        touched = np.zeros((n, num_classes), dtype=bool)
        touched[a_arr, assignment] = True
        touched[b_arr, assignment] = True
        touched[c_arr, assignment] = True
    return [int(i) for i in np.flatnonzero(touched.all(axis=1))]
