"""Command-line front end: describe, build, functor, verify, compare, export.

Exit codes: 0 success, 1 a check or comparison failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from tiltrep import __version__
from tiltrep.closedform import FAMILY_PARAMS, FamilyId, build_family, render_text
from tiltrep.closedform import E6_SERIES2_VARIANTS, e6_rank3
from tiltrep.errors import TiltrepError
from tiltrep.hom import find_iso
from tiltrep.linalg import field_from_tag
from tiltrep.quiver import build_canonical, build_dn, build_e6, is_domestic
from tiltrep.rep import rep_from_json
from tiltrep.series import build_e6_rank3_series1, build_rank2, build_tilting_dn, build_tilting_e6
from tiltrep.tilt import apply_functor
from tiltrep.verify import SUITES, run_checks

LAMBDA_SERIES = {"lambda-rank2": ("p", "i", "j", "m"), "lambda-e6": ("m",)}
FUNCTOR_SERIES = {"dn": ("n", "i", "j", "m"), "e6": ("m",)}


class UsageError(Exception):
    pass


def _emit(text: str, out):
    out.write(text if text.endswith("\n") else text + "\n")


def _params(args, names):
    missing = [k for k in names if getattr(args, k, None) is None]
    if missing:
        raise UsageError(f"missing {', '.join('--' + k for k in missing)}")
    return {k: getattr(args, k) for k in names}


def _render(rep, fmt, title, extra=None):
    if fmt == "json":
        d = rep.to_dict()
        if extra:
            d.update(extra)
        return json.dumps(d, indent=2, sort_keys=False)
    return render_text(rep, title)


def _closed_form(args, field):
    if args.family == "e6-rank3" and args.variant != "exceptional":
        p = _params(args, FAMILY_PARAMS["e6-rank3"])
        fid = FamilyId.of("e6-rank3", **p)
        return fid, e6_rank3(p["series"], p["m"], field=field, variant=args.variant)
    fid = FamilyId.of(args.family, **{k: getattr(args, k, None) for k in FAMILY_PARAMS[args.family]})
    return fid, build_family(fid, field)


def _lambda_module(args, field):
    if args.family == "lambda-rank2":
        p = _params(args, LAMBDA_SERIES["lambda-rank2"])
        return f"lambda-rank2(p={p['p']},i={p['i']},j={p['j']},m={p['m']})", \
            build_rank2(p["p"], p["i"], p["j"], p["m"], field)
    p = _params(args, LAMBDA_SERIES["lambda-e6"])
    return f"lambda-e6(m={p['m']})", build_e6_rank3_series1(p["m"], field)


def _functor_output(series, args, field):
    if series == "dn":
        p = _params(args, FUNCTOR_SERIES["dn"])
        n = p["n"]
        M = build_rank2(n - 2, p["i"], p["j"], p["m"], field)
        return f"F(M_{p['m']}^({p['i']},{p['j']})) over D~{n}", apply_functor(build_tilting_dn(n, field), M).rep
    p = _params(args, FUNCTOR_SERIES["e6"])
    M = build_e6_rank3_series1(p["m"], field)
    return f"F(M_{p['m']}) over E~6", apply_functor(build_tilting_e6(field), M).rep


def _build_any(args, field):
    if args.family in FAMILY_PARAMS:
        fid, rep = _closed_form(args, field)
        return str(fid), rep, {"family": {"kind": fid.kind, **fid.as_dict()}}
    title, rep = _lambda_module(args, field)
    return title, rep, {"family": {"kind": args.family, **_params(args, LAMBDA_SERIES[args.family])}}


# -- subcommands -----------------------------------------------------------

def cmd_describe(args, out):
    if args.algebra == "canonical":
        p = _params(args, ("p", "q", "s"))
        Q = build_canonical(p["p"], p["q"], p["s"])
        extra = {"domestic": is_domestic(p["p"], p["q"], p["s"])}
    elif args.algebra == "dn":
        Q = build_dn(_params(args, ("n",))["n"])
        extra = {}
    elif args.algebra == "e6":
        Q = build_e6()
        extra = {}
    else:
        with open(args.input, encoding="utf-8") as fh:
            rep = rep_from_json(fh.read())
        _emit(_render(rep, args.format, f"imported {args.input}"), out)
        return 0
    if args.format == "json":
        _emit(json.dumps({**Q.to_dict(), **extra}, indent=2), out)
    else:
        text = Q.describe()
        if extra:
            text += f"\ndomestic: {extra['domestic']}"
        _emit(text, out)
    return 0


def cmd_build(args, out):
    field = field_from_tag(args.field)
    title, rep, extra = _build_any(args, field)
    _emit(_render(rep, args.format, title, extra), out)
    return 0


def cmd_functor(args, out):
    field = field_from_tag(args.field)
    title, rep = _functor_output(args.series, args, field)
    _emit(_render(rep, args.format, title), out)
    return 0


def cmd_compare(args, out):
    field = field_from_tag(args.field)
    if args.family == "dn-rank2":
        p = _params(args, FAMILY_PARAMS["dn-rank2"])
        _, F = _functor_output("dn", args, field)
        fid = FamilyId.of("dn-rank2", **p)
    elif args.family == "e6-rank3":
        p = _params(args, FAMILY_PARAMS["e6-rank3"])
        if p["series"] != 1:
            raise UsageError("only series 1 of e6-rank3 is a functor image of a built module")
        _, F = _functor_output("e6", args, field)
        fid = FamilyId.of("e6-rank3", **p)
    else:
        raise UsageError(f"compare supports dn-rank2 and e6-rank3 --series 1, not {args.family}")
    C = build_family(fid, field)
    r = find_iso(F, C, seed=args.seed)
    verdict = {"found": "ISOMORPHIC", "non-isomorphic": "NOT ISOMORPHIC",
               "not-found": "UNDECIDED"}[r.verdict]
    if args.format == "json":
        _emit(json.dumps({"family": str(fid), "verdict": verdict, "reason": r.reason,
                          "checksum": r.checksum(), "seed": r.seed, "tries": r.tries}, indent=2), out)
    else:
        _emit(f"{fid}: {verdict} ({r.reason}; seed {r.seed}, tries {r.tries}) "
              f"certificate {r.checksum()}", out)
    return 0 if r.found else 1


def cmd_verify(args, out):
    ids = SUITES.get(args.suite)
    if ids is None:
        ids = [s.strip().upper() for s in args.suite.split(",")]
    results = run_checks(ids, max_n=args.max_n, max_m=args.max_m, jobs=args.jobs)
    if args.format == "json":
        _emit(json.dumps([{"id": r.cid, "title": r.title, "passed": r.passed, "notes": r.notes,
                           "rows": [{"label": x.label, "computed": str(x.computed),
                                     "expected": str(x.expected), "ok": x.ok, "note": x.note}
                                    for x in r.rows]} for r in results], indent=2), out)
    else:
        for r in results:
            _emit(r.report(verbose=args.verbose), out)
        passed = sum(r.passed for r in results)
        _emit(f"{passed}/{len(results)} checks passed", out)
    return 0 if all(r.passed for r in results) else 1


def cmd_export(args, out):
    field = field_from_tag(args.field)
    if args.family in FUNCTOR_SERIES:
        title, rep = _functor_output(args.family, args, field)
        extra = {"functor": {"series": args.family, **_params(args, FUNCTOR_SERIES[args.family])}}
    else:
        title, rep, extra = _build_any(args, field)
    text = _render(rep, args.format, title, extra)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            _emit(text, fh)
        _emit(f"wrote {args.output}", out)
    else:
        _emit(text, out)
    return 0


# -- parser ----------------------------------------------------------------

def _add_params(p, names):
    for k in names:
        p.add_argument(f"--{k}", type=int)


ALL_PARAMS = ("n", "i", "j", "m", "p", "type", "series")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tiltrep", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"tiltrep {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt="text"):
        p.add_argument("--format", choices=("text", "json"), default=fmt)
        p.add_argument("--field", default="q", help="q (rationals) or fp:<prime>")

    d = sub.add_parser("describe", help="describe a quiver, algebra or a representation file")
    d.add_argument("algebra", choices=("canonical", "dn", "e6", "file"))
    _add_params(d, ("p", "q", "s", "n"))
    d.add_argument("--input", help="representation JSON (with 'file')")
    d.add_argument("--format", choices=("text", "json"), default="text")

    families = sorted(FAMILY_PARAMS) + sorted(LAMBDA_SERIES)
    b = sub.add_parser("build", help="closed-form family member or canonical-algebra module")
    b.add_argument("family", choices=families)
    _add_params(b, ALL_PARAMS)
    b.add_argument("--variant", choices=E6_SERIES2_VARIANTS, default="exceptional")
    common(b)

    f = sub.add_parser("functor", help="apply Hom(T,-) to a series module")
    f.add_argument("series", choices=sorted(FUNCTOR_SERIES))
    _add_params(f, ("n", "i", "j", "m"))
    common(f)

    c = sub.add_parser("compare", help="functor image against the closed form")
    c.add_argument("family", choices=("dn-rank2", "e6-rank3"))
    _add_params(c, ("n", "i", "j", "m", "series"))
    c.add_argument("--seed", type=int, default=None)
    common(c)

    v = sub.add_parser("verify", help="run acceptance checks")
    v.add_argument("suite", help=f"one of {sorted(SUITES)} or a comma list such as A1,A6")
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--max-m", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--verbose", action="store_true")
    v.add_argument("--format", choices=("text", "json"), default="text")

    e = sub.add_parser("export", help="write a family member or functor image")
    e.add_argument("family", choices=families + sorted(FUNCTOR_SERIES))
    _add_params(e, ALL_PARAMS)
    e.add_argument("--variant", choices=E6_SERIES2_VARIANTS, default="exceptional")
    e.add_argument("--output", "-o")
    common(e, fmt="json")
    return ap


COMMANDS = {"describe": cmd_describe, "build": cmd_build, "functor": cmd_functor,
            "compare": cmd_compare, "verify": cmd_verify, "export": cmd_export}


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "seed", 0) is None:
        from tiltrep.hom import ISO_SEED
        args.seed = ISO_SEED
    if args.command == "describe" and args.algebra == "file" and not args.input:
        print("usage error: describe file needs --input", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"usage error: {msg}", file=sys.stderr)
        return 2
    except TiltrepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
