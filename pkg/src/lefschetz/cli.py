"""Command-line surface: ingest files, run the analyses, emit reports.

Subcommands: analyze, hilbert, resolve, wlp, nll, family.  Exit codes:
0 success, 1 validation error, 2 detected property violation, 3 size-cap
abort.  All randomized steps take a seed (default fixed and echoed in the
report), so identical input and seed give byte-identical --json output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hilbert as hb
from .errors import PropertyViolation, SizeCapExceeded, ValidationError
from .families import make_circulant, make_complete_intersection
from .groebner import Ideal
from .io import load_path, presentation_to_data, save_presentation
from .locus import locus_ideal, nll_ideal, reduced_locus
from .modules import (
    ArtinianGradedModule,
    LinearForm,
    dual_varnames,
    module_from_presentation,
    module_to_data,
    wlp_decide,
)
from .presentation import GradedPresentation
from .resolution import build_resolution, check_symgor_shape, socle_degrees, verify_exactness

DEFAULT_SEED = 1729


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True, indent=2))
        return
    _print_block(report, indent=0)


def _print_block(value, indent: int, label: str | None = None) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        if label is not None:
            print(f"{pad}{label}:")
        for key in value:
            _print_block(value[key], indent + (label is not None), key)
        return
    if isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        if label is not None:
            print(f"{pad}{label}:")
        for item in value:
            _print_block(item, indent + 1)
        return
    if label is None:
        print(f"{pad}{value}")
    else:
        print(f"{pad}{label}: {value}")


def _ideal_strings(ideal: Ideal) -> list[str]:
    return [g.format(ideal.varnames) for g in ideal.canonical_generators()]


def _require_presentation(obj, command: str) -> GradedPresentation:
    if not isinstance(obj, GradedPresentation):
        raise ValidationError(f"`{command}` needs a presentation input file")
    return obj


def _as_module(obj) -> ArtinianGradedModule:
    if isinstance(obj, GradedPresentation):
        return module_from_presentation(obj)
    return obj


# ----- subcommands -----


def cmd_analyze(args) -> int:
    obj = load_path(args.file)
    report: dict = {"input": args.file, "seed": args.seed}

    if isinstance(obj, GradedPresentation):
        report["presentation"] = presentation_to_data(obj)
        ok, witness = obj.is_artinian()
        report["artinian"] = {"verdict": ok, **witness}
        if not ok:
            raise ValidationError(
                f"cokernel is not Artinian: dim {witness['dim_at_bound']} at degree "
                f"{witness['scan_bound']}"
            )
        res = build_resolution(obj)
        report["resolution"] = {
            "c": list(res.c),
            "dd": list(res.dd),
            "socle_degrees": socle_degrees(res),
            "symmetrically_gorenstein_shape": check_symgor_shape(res)[
                "symmetrically_gorenstein"
            ],
        }
        table = hb.hilbert_table(obj)
        report["hilbert"] = {
            "table": table,
            "total_length": sum(table),
            "symmetric": hb.is_symmetric(table),
            "strictly_unimodal": hb.is_strictly_unimodal(table),
        }
        report["parity_conditions"] = hb.check_parity_conditions(obj)
        module = module_from_presentation(obj)
    else:
        module = obj
        report["module"] = {"r": module.r, "t0": module.t0, "dims": list(module.dims)}

    report["level"] = module.is_level()
    report["socle_dims"] = module.socle_dims()
    report["wlp"] = wlp_decide(module, trials=args.trials, seed=args.seed)

    if args.no_nll:
        report["nll"] = {"skipped": True}
    else:
        nll_report = reduced_locus(module, sample_points=args.sample_points, seed=args.seed)
        single = nll_report.get("single_degree")
        report["nll"] = {
            "ideal_generators": nll_report["ideal_generators"],
            "level": nll_report["level"],
            "peak": nll_report.get("peak"),
            "two_degree": _strip_sampling(nll_report.get("two_degree")),
            "single_degree": _strip_sampling(single),
            "reduction_degree": single["degree"] if single and single["scheme_equal"] else None,
        }
    _emit(report, args.json)
    return 0


def _strip_sampling(section):
    if not section:
        return section
    out = dict(section)
    sampling = out.pop("sampling", None)
    if sampling is not None:
        out["sampling_disagreements"] = sampling["disagreements"]
    return out


def cmd_hilbert(args) -> int:
    p = _require_presentation(load_path(args.file), "hilbert")
    ok, witness = p.is_artinian()
    if not ok:
        raise ValidationError(
            f"cokernel is not Artinian: dim {witness['dim_at_bound']} at degree "
            f"{witness['scan_bound']}"
        )
    top = p.d - p.a[0] - 1
    rows = []
    mismatch = None
    for t in range(0, top + 1):
        row = {"degree": t}
        if args.method in ("closed", "both"):
            row["closed"] = hb.hilbert_closed(p, t)
        if args.method in ("rank", "both"):
            row["rank"] = hb.hilbert_rank(p, t)
        if args.method == "both" and row["closed"] != row["rank"]:
            row["equal"] = False
            mismatch = mismatch if mismatch is not None else t
        elif args.method == "both":
            row["equal"] = True
        rows.append(row)
    report = {"input": args.file, "method": args.method, "values": rows}
    _emit(report, args.json)
    if mismatch is not None:
        raise PropertyViolation(
            f"closed-form and rank Hilbert values disagree first at degree {mismatch}"
        )
    return 0


def cmd_resolve(args) -> int:
    p = _require_presentation(load_path(args.file), "resolve")
    res = build_resolution(p)
    names = p.varnames

    def grid(mat):
        return [[e.format(names) for e in row] for row in mat]

    report = {
        "input": args.file,
        "twists": {
            "a": list(p.a),
            "b": list(p.b),
            "c": list(res.c),
            "dd": list(res.dd),
        },
        "phi": grid(p.entries),
        "eps": grid(res.eps),
        "eps_prime": grid(res.eps_prime),
        "delta": grid(res.delta),
        "g_prime": list(res.g_prime),
        "socle_degrees": socle_degrees(res),
        "symgor_shape": check_symgor_shape(res),
    }
    if args.verify:
        report["exactness"] = verify_exactness(res)
        if not report["exactness"]["ok"]:
            _emit(report, args.json)
            raise PropertyViolation(
                f"exactness verification failed at stage {report['exactness']['stage']}"
            )
    _emit(report, args.json)
    return 0


def cmd_wlp(args) -> int:
    module = _as_module(load_path(args.file))
    report: dict = {"input": args.file, "dims": list(module.dims), "t0": module.t0}
    if args.form:
        try:
            coeffs = [int(c) for c in args.form.split(",")]
        except ValueError as exc:
            raise ValidationError(f"bad --form value {args.form!r}") from exc
        if len(coeffs) != module.r:
            raise ValidationError(f"--form needs {module.r} coordinates")
        ok, failing = module.is_lefschetz_element(LinearForm(coeffs))
        report["form"] = coeffs
        report["lefschetz_element"] = ok
        report["failing_degrees"] = failing
    else:
        report["wlp"] = wlp_decide(module, trials=args.trials, seed=args.seed)
    _emit(report, args.json)
    return 0


def cmd_nll(args) -> int:
    module = _as_module(load_path(args.file))
    names = dual_varnames(module.r)
    report: dict = {"input": args.file, "dims": list(module.dims), "t0": module.t0}
    if args.degree is not None:
        ideal = locus_ideal(module, args.degree)
        report["degree"] = args.degree
        report["generators"] = _ideal_strings(ideal)
    else:
        per_degree = {}
        for j in module.map_degrees():
            per_degree[str(j)] = _ideal_strings(locus_ideal(module, j))
        report["per_degree"] = per_degree
        report["intersection"] = _ideal_strings(nll_ideal(module))
    if args.reduce:
        red = reduced_locus(module, sample_points=args.sample_points, seed=args.seed)
        red.pop("ideal_generators", None)
        report["reduction"] = red
    _emit(report, args.json)
    return 0


def cmd_family(args) -> int:
    if args.kind == "ci":
        p = make_complete_intersection(args.q1, args.q2, args.q3)
    else:
        forms = args.forms.split(";") if args.forms else None
        p = make_circulant(args.q, args.n, forms)
    save_presentation(p, args.output)
    print(f"wrote {args.output}")
    return 0


# ----- parser -----


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefschetz",
        description=(
            "Exact analysis of finite-length graded modules presented by "
            "matrices of forms: resolutions, Hilbert functions, Lefschetz "
            "properties, and non-Lefschetz loci."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, seed=True):
        sp.add_argument("file", help="input JSON file")
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        if seed:
            sp.add_argument("--seed", type=int, default=DEFAULT_SEED)

    sp = sub.add_parser("analyze", help="run the full pipeline on one input")
    common(sp)
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--sample-points", type=int, default=200)
    sp.add_argument("--no-nll", action="store_true", help="skip the locus computation")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("hilbert", help="Hilbert function values")
    common(sp, seed=False)
    sp.add_argument("--method", choices=("closed", "rank", "both"), default="closed")
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("resolve", help="build the four-term resolution")
    common(sp, seed=False)
    sp.add_argument("--verify", action="store_true", help="append the exactness report")
    sp.set_defaults(func=cmd_resolve)

    sp = sub.add_parser("wlp", help="Weak Lefschetz Property decision")
    common(sp)
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--form", help="test one specific form, e.g. '1,2,-1'")
    sp.set_defaults(func=cmd_wlp)

    sp = sub.add_parser("nll", help="non-Lefschetz locus ideals")
    common(sp)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--degree", type=int, help="single degree j")
    group.add_argument("--all", action="store_true", help="all degrees (default)")
    sp.add_argument("--reduce", action="store_true", help="verify the locus reductions")
    sp.add_argument("--sample-points", type=int, default=200)
    sp.set_defaults(func=cmd_nll)

    sp = sub.add_parser("family", help="generate a built-in family presentation")
    fam = sp.add_subparsers(dest="kind", required=True)
    sp_ci = fam.add_parser("ci", help="complete intersection of three powers")
    sp_ci.add_argument("q1", type=int)
    sp_ci.add_argument("q2", type=int)
    sp_ci.add_argument("q3", type=int)
    sp_ci.add_argument("-o", "--output", required=True)
    sp_ci.set_defaults(func=cmd_family, kind="ci")
    sp_circ = fam.add_parser("circulant", help="banded family cycling three forms")
    sp_circ.add_argument("--q", type=int, required=True)
    sp_circ.add_argument("--n", type=int, required=True)
    sp_circ.add_argument("--forms", help="semicolon-separated forms 'f1;f2;f3'")
    sp_circ.add_argument("-o", "--output", required=True)
    sp_circ.set_defaults(func=cmd_family, kind="circulant")

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PropertyViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return 2
    except SizeCapExceeded as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
