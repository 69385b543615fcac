"""Command-line interface.

Every subcommand builds one JSON report with the keys ``command``, ``inputs``,
``outputs`` and ``provenance``.  ``--format table`` renders that same report
as text.

Exit codes: 0 success or pass, 1 property violated or bound mismatch,
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from unionint import __version__
from unionint.bounds import ak_bound, f_value, sunflower_threshold, uniform_upper_bound, union_l_upper_bound
from unionint.constructions import (
    construct_ak_family,
    construct_st_extremal,
    construct_uniform_star_plus,
    construct_union_l_extremal,
)
from unionint.errors import PreconditionFailed
from unionint.matching import verify_katona_inequalities, verify_level_inequalities
from unionint.predicates import (
    find_l_violation,
    find_st_violation,
    find_union_l_violation,
)
from unionint.reproduce import ak_identity_rows, exact_grid, property_sweeps, uniform_rows
from unionint.search import METHODS, search
from unionint.setcore import ProblemSpec, elements_of, popcount, read_family, write_family
from unionint.sunflower import extract_sunflower

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
EMPIRICAL = "empirical-search"


class UsageError(Exception):
    pass


def _formula(tag: str) -> str:
    return f"formula:{tag}"


def _report(command, inputs, outputs, provenance):
    return {"command": command, "inputs": inputs, "outputs": outputs, "provenance": list(provenance)}


# --- regime handling ----------------------------------------------------------


def _add_regime(p: argparse.ArgumentParser, ak: bool = False, need_n: bool = True) -> None:
    g = p.add_argument_group("regime")
    if need_n:
        g.add_argument("--n", type=int, help="ground set size")
    mode = g.add_mutually_exclusive_group()
    mode.add_argument("--union-l", type=int, metavar="L", help="union-L-intersecting families")
    mode.add_argument("--st", action="store_true", help="(s,t)-union-intersecting families")
    mode.add_argument("--uniform", action="store_true", help="k-uniform (s,t)-union-intersecting families")
    if ak:
        mode.add_argument("--ak", action="store_true", help="k-uniform l-intersecting families")
    g.add_argument("--s", type=int)
    g.add_argument("--t", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--l", type=int, help="intersection size for --ak")


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"missing {' '.join(missing)}")


def _regime(args) -> str:
    if args.union_l is not None:
        return "union-l"
    if args.st:
        return "st"
    if args.uniform:
        return "uniform"
    if getattr(args, "ak", False):
        return "ak"
    raise UsageError("choose a regime: --union-l L, --st, --uniform" +
                     (" or --ak" if hasattr(args, "ak") else ""))


def _spec(args, n: int | None = None) -> ProblemSpec:
    n = args.n if n is None else n
    if n is None:
        raise UsageError("missing --n")
    regime = _regime(args)
    if regime == "union-l":
        return ProblemSpec.union_l(n, args.union_l)
    if regime == "st":
        _need(args, "s", "t")
        return ProblemSpec.st(n, args.s, args.t)
    if regime == "uniform":
        _need(args, "k", "s", "t")
        return ProblemSpec.uniform(n, args.k, args.s, args.t)
    raise UsageError("--ak is not a search regime")


def _regime_inputs(args, n=None) -> dict:
    d = {"n": args.n if n is None else n, "regime": _regime(args)}
    for key in ("union_l", "s", "t", "k", "l"):
        v = getattr(args, key, None)
        if v is not None:
            d[key.replace("_", "-")] = v
    return d


def _lists(masks) -> list[list[int]]:
    return [elements_of(m) for m in masks]


# --- subcommands --------------------------------------------------------------


def cmd_bound(args):
    regime = _regime(args)
    _need(args, "n")
    n = args.n
    if regime == "union-l":
        rep = union_l_upper_bound(n, args.union_l)
    elif regime == "st":
        _need(args, "s", "t")
        rep = f_value(n, args.s, args.t)
    elif regime == "uniform":
        _need(args, "k", "s")
        rep = uniform_upper_bound(n, args.k, args.s)
    else:
        _need(args, "k", "l")
        rep = ak_bound(n, args.k, args.l)
    return _report("bound", _regime_inputs(args), rep.as_dict(), [_formula(rep.case_tag)]), EXIT_OK


def cmd_construct(args):
    regime = _regime(args)
    _need(args, "n")
    n = args.n
    if regime == "union-l":
        F = construct_union_l_extremal(n, args.union_l)
        target = union_l_upper_bound(n, args.union_l)
    elif regime == "st":
        _need(args, "s", "t")
        F = construct_st_extremal(n, args.s, args.t)
        target = f_value(n, args.s, args.t)
    elif regime == "uniform":
        _need(args, "k", "s")
        F = construct_uniform_star_plus(n, args.k, args.s)
        target = uniform_upper_bound(n, args.k, args.s)
    else:
        _need(args, "k", "l")
        target = ak_bound(n, args.k, args.l)
        i = args.i if args.i is not None else (target.argmax or 0)
        F = construct_ak_family(n, args.k, args.l, i)
    if args.out:
        write_family(F, args.out)
    outputs = {"size": len(F), "target": target.value, "meets_target": len(F) == target.value,
               "family": {"n": F.n, "sets": F.to_lists()}}
    if args.out:
        outputs["written"] = args.out
    code = EXIT_OK if len(F) == target.value else EXIT_FAIL
    return _report("construct", _regime_inputs(args), outputs, [_formula(target.case_tag)]), code


def _load(args):
    _need(args, "family")
    F = read_family(args.family)
    if getattr(args, "n", None) is not None and args.n != F.n:
        raise UsageError(f"--n {args.n} disagrees with n={F.n} in {args.family}")
    return F


def cmd_verify(args):
    F = _load(args)
    regime = _regime(args)
    inputs = _regime_inputs(args, F.n)
    inputs["family"] = args.family
    inputs["size"] = len(F)
    witness = None
    if regime == "union-l":
        w = find_union_l_violation(F, args.union_l)
        if w is not None:
            witness = {"union_a": _lists(w[:2]), "union_b": _lists(w[2:]),
                       "common": popcount((w[0] | w[1]) & (w[2] | w[3]))}
    elif regime == "ak":
        _need(args, "l")
        w = find_l_violation(F, args.l)
        if w is not None:
            witness = {"pair": _lists(w), "common": popcount(w[0] & w[1])}
    else:
        _need(args, "s", "t")
        if regime == "uniform":
            _need(args, "k")
            off = [m for m in F if popcount(m) != args.k]
            if off:
                witness = {"not_k_uniform": _lists(off[:1])}
        if witness is None:
            w = find_st_violation(F, args.s, args.t)
            if w is not None:
                witness = {"group_s": _lists(w[0]), "group_t": _lists(w[1])}
    outputs = {"pass": witness is None}
    if witness is not None:
        outputs["witness"] = witness
    return _report("verify", inputs, outputs, ["predicate-check"]), EXIT_OK if witness is None else EXIT_FAIL


def cmd_verify_levels(args):
    F = _load(args)
    if (args.l is None) == (args.t is None):
        raise UsageError("give exactly one of --l (union-l level pairs) or --t (t-intersecting)")
    inputs = {"n": F.n, "family": args.family, "size": len(F)}
    try:
        if args.l is not None:
            inputs["l"] = args.l
            rep = verify_level_inequalities(F, args.l)
            tag = "level-pair-bound"
        else:
            inputs["t"] = args.t
            rep = verify_katona_inequalities(F, args.t)
            tag = "katona-level-bound"
    except PreconditionFailed as exc:
        return _report("verify-levels", inputs, {"pass": False, "precondition": str(exc)},
                       ["predicate-check"]), EXIT_FAIL
    out = rep.as_dict()
    out["pass"] = out.pop("passed")
    return _report("verify-levels", inputs, out, [_formula(tag)]), EXIT_OK if rep.passed else EXIT_FAIL


def cmd_sunflower(args):
    F = _load(args)
    r = args.petals
    k = popcount(F.members[0]) if F.members else 0
    threshold = sunflower_threshold(k, r) if F.members else 0
    inputs = {"n": F.n, "family": args.family, "size": len(F), "petals": r}
    sf = extract_sunflower(F, r)
    guaranteed = len(F) > threshold
    if sf is None:
        outputs = {"found": False, "threshold": threshold,
                   "message": f"none found (size {len(F)} <= threshold {threshold})"
                   if not guaranteed else f"none found although size {len(F)} > threshold {threshold}"}
        code = EXIT_FAIL if guaranteed else EXIT_OK
    else:
        outputs = {"found": True, "threshold": threshold, "center": elements_of(sf.center),
                   "petals": sf.petals.to_lists()}
        code = EXIT_OK
    return _report("sunflower", inputs, outputs, [_formula("sunflower-threshold")]), code


def _reference(spec: ProblemSpec):
    """Closed-form value to set beside a search optimum, if one applies."""
    if spec.regime == "union-l":
        if spec.l >= spec.n + 3:
            return None
        return union_l_upper_bound(spec.n, spec.l)
    if spec.regime == "st":
        return f_value(spec.n, spec.s, spec.t)
    return uniform_upper_bound(spec.n, spec.k, spec.s)


def cmd_search(args):
    spec = _spec(args)
    res = search(spec, method=args.method, threads=args.threads, allow_n6=args.allow_n6,
                 exhaustive=args.exhaustive, kernel=args.kernel)
    out = res.as_dict(timing=not args.no_timing)
    if not args.witness:
        out.pop("witness")
    prov = [EMPIRICAL]
    code = EXIT_OK
    ref = _reference(spec)
    if ref is not None:
        prov.append(_formula(ref.case_tag))
        cmp = {"value": ref.value, "exact": ref.exact, "case": ref.case_tag}
        if spec.regime == "uniform":
            # only a large-n statement, so a gap is recorded, not failed
            cmp["relation"] = ("equal" if res.optimum == ref.value
                               else "EXCEEDS" if res.optimum > ref.value else "below")
            if res.optimum > ref.value:
                out["flag"] = (f"optimum {res.optimum} exceeds C(n-1,k-1)+s-1 = {ref.value} "
                               f"at n={spec.n}; the large-n value does not hold here")
        elif ref.exact:
            cmp["relation"] = "equal" if res.optimum == ref.value else "MISMATCH"
            if res.optimum != ref.value:
                code = EXIT_FAIL
        else:
            cmp["relation"] = "at-least-lower" if res.optimum >= ref.value else "BELOW-LOWER"
            if res.optimum < ref.value:
                code = EXIT_FAIL
        out["formula"] = cmp
    inputs = _regime_inputs(args)
    inputs.update({"method": args.method, "threads": args.threads})
    return _report("search", inputs, out, prov), code


def cmd_reproduce(args):
    grid = exact_grid(args.max_n, threads=args.threads)
    outputs = {"grid": [r.as_dict() for r in grid]}
    ok = all(r.agrees for r in grid)
    outputs["ak_identity"] = ak_identity_rows()
    ok = ok and all(r["ak"] == r["closed_form"] for r in outputs["ak_identity"])
    if not args.skip_uniform:
        rows = uniform_rows(threads=args.threads)
        outputs["uniform"] = [r.as_dict() for r in rows]
        ok = ok and all(r.witness_valid and r.optimum >= r.star_plus for r in rows)
        flagged = [f"n={r.n},k={r.k},s={r.s},t={r.t}" for r in rows if r.status == "EXCEEDS"]
        if flagged:
            outputs["uniform_flag"] = ("optimum exceeds C(n-1,k-1)+s-1 at " + "; ".join(flagged)
                                       + " (large-n value not reached at these n)")
    if not args.skip_properties:
        sweeps = property_sweeps(args.seed, scale=args.scale)
        outputs["properties"] = [s.as_dict(timing=not args.no_timing) for s in sweeps]
        ok = ok and all(s.passed for s in sweeps)
    outputs["pass"] = ok
    inputs = {"max-n": args.max_n, "threads": args.threads, "seed": args.seed, "scale": args.scale}
    prov = sorted({_formula(r.tag) for r in grid}) + [EMPIRICAL]
    return _report("reproduce", inputs, outputs, prov), EXIT_OK if ok else EXIT_FAIL


# --- output -------------------------------------------------------------------


def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v)
    return "-" if v is None else str(v)


def _table(rows: list[dict], skip=("witness",)) -> list[str]:
    cols = [c for c in rows[0] if c not in skip]
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return lines


def format_table(report: dict) -> str:
    """Plain-text rendering of a report; no numbers are computed here."""
    lines = [f"command: {report['command']}"]
    for k, v in report["inputs"].items():
        lines.append(f"  {k}: {_cell(v)}")
    for k, v in report["outputs"].items():
        if isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{k}:")
            lines += ["  " + ln for ln in _table(v)]
        else:
            lines.append(f"{k}: {_cell(v)}")
    lines.append("provenance: " + ", ".join(report["provenance"]))
    return "\n".join(lines) + "\n"


def emit(report: dict, fmt: str) -> None:
    if fmt == "table":
        sys.stdout.write(format_table(report))
    else:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--no-timing", action="store_true",
                        help="omit wall-clock fields so output is byte-for-byte reproducible")

    p = argparse.ArgumentParser(prog="unionint", description="Exact tools for union-intersecting set families.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", parents=[common], help="closed-form extremal value")
    _add_regime(b, ak=True)
    b.set_defaults(func=cmd_bound)

    c = sub.add_parser("construct", parents=[common], help="build an extremal family")
    _add_regime(c, ak=True)
    c.add_argument("--i", type=int, help="candidate index for --ak (default: the maximiser)")
    c.add_argument("--out", help="write the family file here")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="check a family file against a regime")
    _add_regime(v, ak=True)
    v.add_argument("--family", help="family JSON file")
    v.set_defaults(func=cmd_verify)

    vl = sub.add_parser("verify-levels", parents=[common], help="level-pair inequalities for a family file")
    vl.add_argument("--family", help="family JSON file")
    vl.add_argument("--l", type=int, help="union-l level pairs (family must be a union-l upset)")
    vl.add_argument("--t", type=int, help="t-intersecting level pairs")
    vl.set_defaults(func=cmd_verify_levels)

    sf = sub.add_parser("sunflower", parents=[common], help="extract a sunflower from a uniform family")
    sf.add_argument("--family", help="family JSON file")
    sf.add_argument("--petals", type=int, default=3, metavar="R")
    sf.set_defaults(func=cmd_sunflower)

    s = sub.add_parser("search", parents=[common], help="exact maximum by exhaustive search")
    _add_regime(s)
    s.add_argument("--method", choices=METHODS, default="auto")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--allow-n6", action="store_true", help="permit upset search at n = 6")
    s.add_argument("--exhaustive", action="store_true", help="uniform search without the size bound")
    s.add_argument("--kernel", choices=("python", "cython"), default=None)
    wit = s.add_mutually_exclusive_group()
    wit.add_argument("--witness", dest="witness", action="store_true", default=True)
    wit.add_argument("--no-witness", dest="witness", action="store_false")
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("reproduce", parents=[common], help="formula vs search grid and property sweeps")
    r.add_argument("--max-n", type=int, default=5)
    r.add_argument("--threads", type=int, default=1)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--scale", type=float, default=1.0, help="multiplier for property-sweep trial counts")
    r.add_argument("--skip-properties", action="store_true")
    r.add_argument("--skip-uniform", action="store_true")
    r.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "threads", 1) < 1:
        print("unionint: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        report, code = args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"unionint {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
