"""Command-line surface.

One verb per counting question so that reproduction scripts read like the
quantities they compute: generate, verify, count, pinned, chains, energy,
selfsim, sweep, fit.

Exit codes: 0 success, 1 usage/input error, 2 validation failure (verify
found violations), 3 generator retry exhaustion.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import constructions, sweep as sweep_mod
from ._backend import kernel_backend
from .counters import (
    PIN_KINDS,
    PinSpec,
    angle_histogram,
    cauchy_schwarz_check,
    count_chains_with_stats,
    count_pinned_with_stats,
    energy,
    find_self_similar_points,
)
from .geom import EXACT, GeneralPositionError, GeometryError
from .pointfile import PointParseError, parse_config, write_config
from .predicates import verify_general_position

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_RETRY_EXHAUSTED = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we use 1
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_config(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_config(text, label=path)


def _write_output(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _print_stats(stats):
    if stats is None:
        return
    ratio = stats.min_gap_between_classes / stats.eps
    print(
        f"# clusters={stats.num_classes} min_gap={stats.min_gap_between_classes:.3e}"
        f" max_spread={stats.max_spread_within_class:.3e} min_gap/eps={ratio:.3g}"
        f" backend={kernel_backend()}",
        file=sys.stderr,
    )


def _require_exact(args, config):
    if getattr(args, "exact", False) and config.mode != EXACT:
        raise GeometryError(
            "--exact given but the input has non-rational coordinates"
        )


def _cmd_generate(args) -> int:
    name = args.construction
    seed = args.seed
    if name != "sunshine" and args.n is None:
        raise GeometryError(f"--n is required for {name}")
    if name == "log_spiral":
        config = constructions.log_spiral(args.n, args.beta)
    elif name == "cyl_helix":
        config = constructions.cyl_helix(args.n)
    elif name == "conchospiral":
        config = constructions.conchospiral(args.n, args.beta)
    elif name == "cone":
        config = constructions.cone_config(args.n, args.alpha, seed)
    elif name == "spindle_torus":
        config = constructions.spindle_torus_config(args.n, args.alpha, seed)
    elif name == "cones":
        config = constructions.cones_construction(args.n, seed)
    elif name == "sunshine":
        config = constructions.sunshine(args.m, args.exponent_base)
    elif name == "random":
        config = constructions.random_general_position(args.n, args.dim, seed)
    else:  # pragma: no cover - argparse choices guard this
        raise GeometryError(f"unknown construction {name!r}")
    _write_output(write_config(config), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    config = _read_config(args.infile)
    report = verify_general_position(config, args.eps, args.threads)
    for t in report.collinear_triples:
        print("collinear " + " ".join(map(str, t)))
    for q in report.concyclic_quadruples:
        print("concyclic " + " ".join(map(str, q)))
    print(f"summary: {report.summary()}")
    return EXIT_OK if report.is_general_position else EXIT_VALIDATION


def _cmd_count(args) -> int:
    config = _read_config(args.infile)
    _require_exact(args, config)
    hist = angle_histogram(config, args.eps, args.threads)
    _print_stats(hist.cluster_stats)
    print(hist.distinct)
    return EXIT_OK


def _cmd_pinned(args) -> int:
    config = _read_config(args.infile)
    _require_exact(args, config)
    pin = PinSpec(args.pin_kind, args.a, args.b if args.pin_kind not in ("endpoint", "center") else None)
    count, stats = count_pinned_with_stats(config, pin, args.eps)
    _print_stats(stats)
    print(count)
    return EXIT_OK


def _cmd_chains(args) -> int:
    config = _read_config(args.infile)
    _require_exact(args, config)
    count, stats = count_chains_with_stats(
        config, args.k, args.eps, args.chains_all_distinct, args.threads
    )
    _print_stats(stats)
    print(count)
    return EXIT_OK


def _cmd_energy(args) -> int:
    config = _read_config(args.infile)
    _require_exact(args, config)
    hist = angle_histogram(config, args.eps, args.threads)
    _print_stats(hist.cluster_stats)
    if not hist.entries:
        raise GeometryError("fewer than 3 points: no angles, no energy")
    bound, holds = cauchy_schwarz_check(hist)
    print(f"energy={energy(hist)}")
    print(f"distinct={hist.distinct}")
    print(f"bound={bound.numerator}/{bound.denominator}")
    print(f"holds={'true' if holds else 'false'}")
    return EXIT_OK


def _cmd_selfsim(args) -> int:
    config = _read_config(args.infile)
    _require_exact(args, config)
    indices = find_self_similar_points(config, args.eps, args.threads)
    print(" ".join(map(str, indices)))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    n_list = [int(v) for v in args.n.split(",") if v]
    quantities = [q for q in args.quantities.split(",") if q]
    params = {
        "beta": args.beta,
        "alpha": args.alpha,
        "dim": args.dim,
        "exponent_base": args.exponent_base,
    }
    rows = sweep_mod.run_sweep(
        args.construction,
        n_list,
        quantities,
        eps=args.eps,
        seed=args.seed,
        threads=args.threads,
        params=params,
    )
    _write_output(sweep_mod.rows_to_csv(rows), args.out)
    return EXIT_OK


def _cmd_fit(args) -> int:
    import csv as csv_mod
    from fractions import Fraction

    text = sys.stdin.read() if args.infile == "-" else Path(args.infile).read_text()
    reader = csv_mod.DictReader(text.splitlines())
    rows = []
    for rec in reader:
        value = rec["value"]
        parsed = Fraction(value) if "/" in value else int(value)
        rows.append(
            sweep_mod.SweepRow(
                rec["construction"],
                int(rec["n"]),
                rec["quantity"],
                parsed,
                float(rec["eps"]),
                int(rec["elapsed_ms"]),
            )
        )
    if args.quantity is not None:
        rows = [row for row in rows if row.quantity == args.quantity]
    result = sweep_mod.fit_loglog(rows)
    print(f"slope={result.slope:.6f}")
    print(f"intercept={result.intercept:.6f}")
    print(f"r_squared={result.r_squared:.6f}")
    return EXIT_OK


def _add_common(parser, *, eps=True, threads=True, exact=False):
    if eps:
        parser.add_argument("--eps", type=float, default=1e-9,
                            help="float-mode tolerance (default 1e-9)")
    if threads:
        parser.add_argument("--threads", type=int, default=1,
                            help="worker cap; results are identical for any value")
    if exact:
        parser.add_argument("--exact", action="store_true",
                            help="require exact keys; error on non-rational input")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="anglekit", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    gen = subs.add_parser("generate", help="emit a construction as a point file")
    gen.add_argument("--construction", required=True,
                     choices=["log_spiral", "cyl_helix", "conchospiral", "cone",
                              "spindle_torus", "cones", "sunshine", "random"])
    gen.add_argument("--n", type=int, help="number of points")
    gen.add_argument("--m", type=int, default=5, help="rays (sunshine only)")
    gen.add_argument("--beta", type=float, default=0.1, help="spiral growth rate")
    gen.add_argument("--alpha", type=float, default=math.pi / 4,
                     help="cone/torus aperture in radians")
    gen.add_argument("--dim", type=int, default=2, choices=[2, 3],
                     help="dimension (random only)")
    gen.add_argument("--exponent-base", type=float, default=2.0,
                     help="radial base (sunshine only)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None)
    gen.set_defaults(func=_cmd_generate)

    ver = subs.add_parser("verify", help="general-position scan")
    ver.add_argument("--in", dest="infile", required=True)
    _add_common(ver)
    ver.set_defaults(func=_cmd_verify)

    cnt = subs.add_parser("count", help="distinct angle classes")
    cnt.add_argument("--in", dest="infile", required=True)
    _add_common(cnt, exact=True)
    cnt.set_defaults(func=_cmd_count)

    pin = subs.add_parser("pinned", help="distinct angles through pinned points")
    pin.add_argument("--in", dest="infile", required=True)
    pin.add_argument("--pin-kind", required=True, choices=list(PIN_KINDS))
    pin.add_argument("--a", type=int, default=0, help="first pinned index")
    pin.add_argument("--b", type=int, default=1, help="second pinned index")
    _add_common(pin, threads=False, exact=True)
    pin.set_defaults(func=_cmd_pinned)

    cha = subs.add_parser("chains", help="distinct angle k-chains")
    cha.add_argument("--in", dest="infile", required=True)
    cha.add_argument("--k", type=int, required=True)
    cha.add_argument("--chains-all-distinct", action="store_true",
                     help="require all k+2 chain points distinct")
    _add_common(cha, exact=True)
    cha.set_defaults(func=_cmd_chains)

    ene = subs.add_parser("energy", help="angle energy and its class-count bound")
    ene.add_argument("--in", dest="infile", required=True)
    _add_common(ene, exact=True)
    ene.set_defaults(func=_cmd_energy)

    sel = subs.add_parser("selfsim", help="points touching every angle class")
    sel.add_argument("--in", dest="infile", required=True)
    _add_common(sel, exact=True)
    sel.set_defaults(func=_cmd_selfsim)

    swp = subs.add_parser("sweep", help="grid of counts over a construction")
    swp.add_argument("--construction", required=True,
                     choices=["log_spiral", "cyl_helix", "conchospiral", "cone",
                              "spindle_torus", "cones", "sunshine", "random"])
    swp.add_argument("--n", required=True, help="comma-separated sizes")
    swp.add_argument("--quantities", required=True,
                     help="comma-separated: distinct_angles, energy, bound, "
                          "pinned_<kind>, chains_<k>")
    swp.add_argument("--beta", type=float, default=0.1)
    swp.add_argument("--alpha", type=float, default=math.pi / 4)
    swp.add_argument("--dim", type=int, default=2, choices=[2, 3])
    swp.add_argument("--exponent-base", type=float, default=2.0)
    swp.add_argument("--seed", type=int, default=0)
    swp.add_argument("--out", default=None)
    _add_common(swp)
    swp.set_defaults(func=_cmd_sweep)

    fit = subs.add_parser("fit", help="log-log slope of sweep output")
    fit.add_argument("--in", dest="infile", required=True)
    fit.add_argument("--quantity", default=None,
                     help="restrict to one quantity column value")
    fit.set_defaults(func=_cmd_fit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GeneralPositionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RETRY_EXHAUSTED
    except (PointParseError, GeometryError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:  # console_scripts entry point
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
