"""Command-line interface.

Commands:
    analyze <file>        full pipeline with verdicts
    presentation <file>   print the sweep presentation
    bounds <file>         combinatorial bounds (arrangement or raw incidence file)
    preset <name>         emit a built-in arrangement file
    selftest              run the whole validation suite

Exit status: 0 on success, 1 when a consistency verdict or self-check
fails, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from . import geometry
from . import pipeline
from . import presets
from . import validation
from .geometry import InputError


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _parse_primes(text):
    try:
        primes = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise InputError(f"bad --primes list {text!r}") from None
    return primes


def _emit_json(obj, out):
    out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _print_analysis(a, out):
    r = pipeline.report_dict(a)
    out.write(f"input: {r['input']['mode']}, {r['input']['n_lines']} lines, "
              f"cover degree {r['input']['cover_degree']}\n")
    census = ", ".join(f"{c} of multiplicity {m}" for m, c in sorted(
        (int(k), v) for k, v in r["incidence"]["census"].items()))
    out.write(f"incidence: {len(r['incidence']['points'])} points ({census})\n")
    p = r["presentation"]
    out.write(f"presentation: {p['generators']} generators, {p['relators']} relators, "
              f"total length {p['total_length']}\n")
    out.write(f"H1 = {a.h1}\n")
    mod = ", ".join(f"F_{q}: {v}" for q, v in sorted((int(k), v) for k, v in r["betti"]["mod"].items()))
    out.write(f"betti: b1(Q) = {r['betti']['q']}; {mod}\n")
    if r["bounds"] is not None:
        b = r["bounds"]
        out.write(f"bounds: lower {b['lower']}, per-line best {b['onehyp']['best']}, "
                  f"per-degree total {b['cdo']['total']}\n")
        fired = ", ".join(name for name, _ in b["applicable"]) or "none"
        out.write(f"exactness criteria fired: {fired}\n")
    if r["prediction"] is not None and r["prediction"]["exact"] is not None:
        e = r["prediction"]["exact"]
        out.write(f"predicted exactly: rank {e['rank']}, torsion {e['torsion']}\n")
    for name, ok in sorted(r["verdicts"].items()):
        out.write(f"verdict {name}: {'pass' if ok else 'FAIL'}\n")
    for note in r["notes"]:
        out.write(f"note [{note['id']}]: {note['text']}\n")


def cmd_analyze(args, out):
    a = pipeline.analyze_text(
        _read(args.file),
        infinity_index=args.infinity,
        primes=_parse_primes(args.primes) if args.primes else None,
        modulus=args.modulus,
    )
    if args.json:
        _emit_json(pipeline.report_dict(a), out)
    else:
        _print_analysis(a, out)
    return 0 if a.all_verdicts_pass else 1


def cmd_presentation(args, out):
    arr = geometry.parse_arrangement(_read(args.file))
    if isinstance(arr, geometry.Arrangement):
        idx = arr.n_lines - 1 if args.infinity is None else args.infinity
        aff = geometry.decone(arr, idx)
    else:
        aff = arr
    aff = geometry.shear_to_generic(aff)
    from .presentation import arvola_randell

    pres = arvola_randell(aff)
    if args.json:
        _emit_json(
            {
                "kind": pres.kind,
                "generators": pres.generator_count,
                "cover_degree": pres.phi_modulus,
                "relators": [
                    {"word": r.word.format(), "vertex": r.vertex, "index": r.index}
                    for r in pres.relators
                ],
            },
            out,
        )
    else:
        out.write(pres.text())
    return 0


def cmd_bounds(args, out):
    text = _read(args.file)
    head = next((l.split("#")[0].strip() for l in text.splitlines() if l.split("#")[0].strip()), "")
    if head.startswith("incidence"):
        inc = bounds_mod.parse_incidence(text)
        n = inc.n_lines
        report = bounds_mod.bound_report(inc, n, aff=None)
        note = "raw incidence input: the transverse-split check needs coordinates and was skipped"
    else:
        arr = geometry.parse_arrangement(text)
        _, report = bounds_mod.predict(arr, infinity_index=args.infinity)
        n = report.n
        note = None
    opc = report.one_point
    payload = {
        "n_lines": n,
        "lower": report.lower_bound,
        "onehyp": {"per_line": {str(i): v for i, v in sorted(report.onehyp_per_line.items())},
                   "best": report.onehyp_best},
        "cdo": {"per_k": {str(k): v for k, v in sorted(report.cdo_per_k.items())},
                "total": report.cdo_total},
        "corollary_witness": report.corollary_witness,
        "one_point": {"fires": opc.fires,
                      "witness": list(opc.witness) if opc.witness else None,
                      "guard_blocked": list(opc.guard_blocked) if opc.guard_blocked else None},
        "oka_sakamoto": [list(s) for s in report.oka_sakamoto] if report.oka_sakamoto else None,
        "applicable": [[name, pipeline._jsonable(w)] for name, w in report.applicable],
        "notes": list(report.notes) + ([note] if note else []),
    }
    if args.json:
        _emit_json(payload, out)
    else:
        out.write(f"lines: {n}\n")
        out.write(f"lower bound: {report.lower_bound}\n")
        out.write(f"per-line upper bound (best): {report.onehyp_best}\n")
        out.write(f"per-degree upper bound (total): {report.cdo_total}\n")
        fired = ", ".join(name for name, _ in report.applicable) or "none"
        out.write(f"exactness criteria fired: {fired}\n")
        for n_ in payload["notes"]:
            out.write(f"note: {n_}\n")
    return 0


def cmd_preset(args, out):
    out.write(presets.preset_text(args.name, seed=args.seed))
    return 0


def cmd_selftest(args, out):
    results = validation.run_all(seed=args.seed if args.seed is not None else validation.DEFAULT_SEED)
    if args.json:
        _emit_json(
            {
                "passed": all(r.passed for r in results),
                "criteria": [
                    {"number": r.number, "name": r.name, "passed": r.passed,
                     "detail": r.detail, "seconds": round(r.seconds, 3)}
                    for r in results
                ],
            },
            out,
        )
    else:
        for r in results:
            out.write(r.line() + "\n")
        n_pass = sum(r.passed for r in results)
        out.write(f"{n_pass}/{len(results)} criteria passed\n")
    return 0 if all(r.passed for r in results) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="milnorfiber",
        description="First homology of the Milnor fiber of a complexified-real "
        "line arrangement: exact computation plus combinatorial cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full pipeline on an arrangement file")
    p.add_argument("file")
    p.add_argument("--infinity", type=int, default=None,
                   help="index of the line sent to infinity (default: last)")
    p.add_argument("--primes", default=None, help="comma-separated torsion probe primes")
    p.add_argument("--modulus", type=int, default=None,
                   help="analyze the Z/m quotient cover instead of the full cover")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("presentation", help="print the sweep presentation")
    p.add_argument("file")
    p.add_argument("--infinity", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_presentation)

    p = sub.add_parser("bounds", help="combinatorial bounds from an arrangement or incidence file")
    p.add_argument("file")
    p.add_argument("--infinity", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("preset", help="emit a built-in arrangement")
    p.add_argument("name", help="triangle | pencil:n | nearpencil:n | generic:n:seed | "
                                "braid-a3 | parallel-family")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=cmd_preset)

    p = sub.add_parser("selftest", help="run the validation suite")
    p.add_argument("--seed", type=int, default=None, help="seed for the random corpus")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, sys.stdout)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
