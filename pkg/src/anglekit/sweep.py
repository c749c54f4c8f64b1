"""Experiment sweeps over constructions and empirical scaling fits."""

from __future__ import annotations

import csv
import io
import math
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import constructions
from .counters import (
    PinSpec,
    angle_histogram,
    cauchy_schwarz_check,
    count_chains,
    count_pinned,
    energy,
)

CSV_HEADER = ["construction", "n", "quantity", "value", "eps", "elapsed_ms"]

#: quantity names accepted by run_sweep: distinct_angles, energy, bound,
#: pinned_<kind> (designated points 0 and 1), chains_<k>.
BASE_QUANTITIES = ("distinct_angles", "energy", "bound")


@dataclass(frozen=True)
class SweepRow:
    construction: str
    n: int
    quantity: str
    value: int | Fraction
    eps: float
    elapsed_ms: int


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    r_squared: float


def _generate(construction: str, n: int, seed: int, params: dict):
    if construction == "log_spiral":
        return constructions.log_spiral(n, params.get("beta", 0.1))
    if construction == "cyl_helix":
        return constructions.cyl_helix(n)
    if construction == "conchospiral":
        return constructions.conchospiral(n, params.get("beta", 0.1))
    if construction == "cone":
        return constructions.cone_config(n, params.get("alpha", math.pi / 4), seed)
    if construction == "spindle_torus":
        return constructions.spindle_torus_config(
            n, params.get("alpha", math.pi / 3), seed
        )
    if construction == "cones":
        return constructions.cones_construction(n, seed)
    if construction == "sunshine":
        # n is the ray count m for this construction
        return constructions.sunshine(n, params.get("exponent_base", 2.0))
    if construction == "random":
        return constructions.random_general_position(n, params.get("dim", 2), seed)
    raise ValueError(f"unknown construction {construction!r}")


def _evaluate(config, quantity: str, eps: float, threads: int):
    if quantity == "distinct_angles":
        return angle_histogram(config, eps, threads).distinct
    if quantity == "energy":
        return energy(angle_histogram(config, eps, threads))
    if quantity == "bound":
        bound, _ = cauchy_schwarz_check(angle_histogram(config, eps, threads))
        return bound
    if quantity.startswith("pinned_"):
        kind = quantity[len("pinned_") :]
        b = None if kind in ("endpoint", "center") else 1
        return count_pinned(config, PinSpec(kind, 0, b), eps)
    if quantity.startswith("chains_"):
        k = int(quantity[len("chains_") :])
        return count_chains(config, k, eps, threads=threads)
    raise ValueError(f"unknown quantity {quantity!r}")


def run_sweep(
    construction: str,
    n_list: list[int],
    quantities: list[str],
    eps: float = 1e-9,
    seed: int = 0,
    threads: int = 1,
    params: dict | None = None,
    warn_stream=None,
) -> list[SweepRow]:
    """One row per (n, quantity); invalid n are skipped with a warning."""
    params = params or {}
    warn_stream = warn_stream if warn_stream is not None else sys.stderr
    rows = []
    for n in n_list:
        try:
            config = _generate(construction, n, seed, params)
        except ValueError as exc:
            print(f"warning: skipping n={n}: {exc}", file=warn_stream)
            continue
        for quantity in quantities:
            start = time.perf_counter()
            value = _evaluate(config, quantity, eps, threads)
            elapsed_ms = int(round((time.perf_counter() - start) * 1000.0))
            rows.append(SweepRow(construction, n, quantity, value, eps, elapsed_ms))
    return rows


def _format_value(value) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            [
                row.construction,
                row.n,
                row.quantity,
                _format_value(row.value),
                repr(row.eps),
                row.elapsed_ms,
            ]
        )
    return buf.getvalue()


def fit_loglog(rows: list[SweepRow]) -> FitResult:
    """Least-squares line through (ln n, ln value) for one quantity."""
    quantities = {row.quantity for row in rows}
    if len(quantities) > 1:
        raise ValueError(f"rows mix quantities {sorted(quantities)}; fit one at a time")
    if len(rows) < 3:
        raise ValueError("need at least 3 rows to fit")
    if any(row.n <= 0 or row.value <= 0 for row in rows):
        raise ValueError("log-log fit needs positive n and value")
    x = np.log([float(row.n) for row in rows])
    y = np.log([float(row.value) for row in rows])
    design = np.column_stack([x, np.ones_like(x)])
    (slope, intercept), *_ = np.linalg.lstsq(design, y, rcond=None)
    residuals = y - design @ np.array([slope, intercept])
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot == 0.0:
        r_squared = 1.0 if ss_res < 1e-30 else 0.0
    else:
        r_squared = max(0.0, min(1.0, 1.0 - ss_res / ss_tot))
    return FitResult(float(slope), float(intercept), r_squared)
