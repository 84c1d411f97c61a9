"""Command-line interface tying generators, depth queries, cell arrangements,
and audits together behind stable file formats.

Exit codes: 0 success and all assertions hold; 1 an audit or assertion was
violated; 2 malformed input (unknown flags, bad rationals, dimension
mismatches); 3 a construction failed its exact verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arrangements import (
    DegenerateArrangementError,
    canonical_rotation,
    cell_depth_sequence,
    verify_cell_depth_lemma,
)
from .audits import AuditViolation, depth_stats, mu_audit, nu_audit, parity_audit, write_csv
from .constructions import (
    ConstructionError,
    ConstructionSpec,
    gen_random_core_config,
    gen_regular_ngon,
    generate,
)
from .depth import (
    ColourfulConfiguration,
    colourful_depth,
    core_membership,
    monochrome_depth,
)
from .exact import InputError, origin
from .serialization import (
    config_to_dict,
    load_config,
    load_points,
    parse_point,
    save_config,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_CONSTRUCTION = 3


def _print_report(rep, witnesses: bool):
    print(f"mode: {rep.mode}")
    print(f"count: {rep.count}")
    print(f"degenerate: {rep.degenerate}")
    print(f"boundary: {rep.boundary}")
    if witnesses and rep.witnesses is not None:
        for w in rep.witnesses:
            print("witness:", w)


def _cmd_gen(args) -> int:
    if args.kind == "ngon":
        if args.n is None:
            raise InputError("gen ngon requires --n")
        pts = gen_regular_ngon(args.n, seed=args.seed)
        config = ColourfulConfiguration(2, (tuple(pts),))
        depth = monochrome_depth(pts, origin(2), "open").count
    elif args.kind == "random":
        if args.dim is None:
            raise InputError("gen random requires --dim")
        vc = gen_random_core_config(
            args.dim, args.points_per_colour or args.dim + 1, args.seed
        )
        config, depth = vc.config, vc.claimed_depth_at_origin
    else:
        if args.dim is None:
            raise InputError(f"gen {args.kind} requires --dim")
        spec = ConstructionSpec(
            kind=args.kind,
            dim=args.dim,
            epsilon=Fraction(args.epsilon) if args.epsilon else None,
            seed=args.seed,
        )
        vc = generate(spec)
        config, depth = vc.config, vc.claimed_depth_at_origin
    if args.out:
        save_config(config, args.out)
    else:
        print(json.dumps(config_to_dict(config)))
    print(f"depth_at_origin: {depth}")
    return EXIT_OK


def _cmd_depth(args) -> int:
    pts = load_points(args.points)
    p = parse_point(args.point, dim=pts[0].dim)
    rep = monochrome_depth(pts, p, args.mode, want_witnesses=args.witnesses)
    _print_report(rep, args.witnesses)
    return EXIT_OK


def _cmd_cdepth(args) -> int:
    config = load_config(args.config)
    p = parse_point(args.point, dim=config.dim)
    if args.require_core and not core_membership(config, p, strict=True):
        print("query point is not strictly inside every colour hull", file=sys.stderr)
        return EXIT_VIOLATION
    rep = colourful_depth(config, p, args.mode, want_witnesses=args.witnesses)
    _print_report(rep, args.witnesses)
    return EXIT_OK


def _cmd_core(args) -> int:
    config = load_config(args.config)
    p = parse_point(args.point, dim=config.dim)
    member = core_membership(config, p, strict=False)
    strict = core_membership(config, p, strict=True) if member else False
    print(f"member: {str(member).lower()}")
    print(f"strict_member: {str(strict).lower()}")
    return EXIT_OK


def _cmd_cells2d(args) -> int:
    config = load_config(args.config)
    if config.dim != 2:
        raise InputError("cells2d needs a 2-dimensional configuration")
    i, j = args.classes
    if not (0 <= i < config.num_classes and 0 <= j < config.num_classes) or i == j:
        raise InputError("invalid class indices")
    arr = cell_depth_sequence(config.classes[i], config.classes[j])
    rep = verify_cell_depth_lemma(arr)
    print("sequence:", ",".join(str(x) for x in canonical_rotation(arr.cell_depths)))
    print(f"lemma_ok: {str(rep.lemma_ok).lower()}")
    return EXIT_OK if rep.lemma_ok else EXIT_VIOLATION


def _cmd_audit(args) -> int:
    if args.kind == "parity":
        sizes = None
        if args.sizes:
            sizes = tuple(int(s) for s in args.sizes.split(","))
        report = parity_audit(
            args.parity_kind,
            args.dim,
            args.trials,
            args.seed,
            n=args.n,
            sizes=sizes,
        )
    elif args.kind == "mu":
        report = mu_audit(args.dim, args.trials, args.core_samples, args.seed)
    elif args.kind == "nu":
        report = nu_audit(args.dim, args.trials, args.seed, samples=args.samples)
    elif args.kind == "stats":
        report = depth_stats(args.dim, args.trials, args.seed, keep_records=True)
    else:  # pragma: no cover - argparse enforces choices
        raise InputError(f"unknown audit kind {args.kind!r}")
    summary = report.summary()
    summary["invocation"] = {
        "command": "audit",
        "kind": args.kind,
        "dim": args.dim,
        "trials": args.trials,
        "seed": args.seed,
    }
    if args.csv:
        write_csv(report, args.csv)
    text = json.dumps(summary, sort_keys=True)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    print(text)
    if report.violations:
        return EXIT_VIOLATION
    if args.kind == "mu" and report.min_observed < report.reference_bounds[0]:
        return EXIT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="colourdepth",
        description="Exact colourful simplicial depth: generators, counts, audits.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a configuration and verify its depth")
    gen.add_argument("kind", choices=["identical", "sminus", "sprime", "splus", "ngon", "random"])
    gen.add_argument("--dim", type=int)
    gen.add_argument("--epsilon", type=str, default=None, help="rational, e.g. 1/200")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--n", type=int, default=None, help="vertex count for ngon")
    gen.add_argument("--points-per-colour", type=int, default=None)
    gen.add_argument("--out", type=str, default=None, help="write configuration JSON here")
    gen.set_defaults(func=_cmd_gen)

    dep = sub.add_parser("depth", help="monochrome depth of a point")
    dep.add_argument("--points", required=True, help="point-set JSON file")
    dep.add_argument("--point", required=True, help="query, e.g. '1/2,-3'")
    dep.add_argument("--mode", choices=["open", "closed"], default="open")
    dep.add_argument("--witnesses", action="store_true")
    dep.set_defaults(func=_cmd_depth)

    cdep = sub.add_parser("cdepth", help="colourful depth of a point")
    cdep.add_argument("--config", required=True, help="configuration JSON file")
    cdep.add_argument("--point", required=True)
    cdep.add_argument("--mode", choices=["open", "closed"], default="open")
    cdep.add_argument("--witnesses", action="store_true")
    cdep.add_argument("--require-core", action="store_true",
                      help="exit 1 unless the query is strictly inside every colour hull")
    cdep.set_defaults(func=_cmd_cdepth)

    core = sub.add_parser("core", help="core membership of a point")
    core.add_argument("--config", required=True)
    core.add_argument("--point", required=True)
    core.set_defaults(func=_cmd_core)

    cells = sub.add_parser("cells2d", help="cell depth sequence of two 3-point classes")
    cells.add_argument("--config", required=True)
    cells.add_argument("--classes", type=int, nargs=2, default=(0, 1))
    cells.set_defaults(func=_cmd_cells2d)

    audit = sub.add_parser("audit", help="randomized audits with CSV/JSON reports")
    audit.add_argument("kind", choices=["parity", "mu", "nu", "stats"])
    audit.add_argument("--dim", type=int, required=True)
    audit.add_argument("--trials", type=int, default=1000)
    audit.add_argument("--seed", type=int, default=0)
    audit.add_argument("--parity-kind", default="monochrome",
                       choices=["monochrome", "colourful_odd_d", "colourful_even_sizes"])
    audit.add_argument("--n", type=int, default=None, help="monochrome sample size")
    audit.add_argument("--sizes", type=str, default=None, help="class sizes, e.g. 2,2,2")
    audit.add_argument("--core-samples", type=int, default=8)
    audit.add_argument("--samples", type=int, default=4)
    audit.add_argument("--csv", type=str, default=None)
    audit.add_argument("--json", type=str, default=None)
    audit.set_defaults(func=_cmd_audit)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConstructionError as e:
        print(f"construction failed: {e}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    except AuditViolation as e:
        print(f"audit violation: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except (InputError, DegenerateArrangementError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
