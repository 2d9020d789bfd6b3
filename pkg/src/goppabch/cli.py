"""Command-line front end: ``goppabch <command> ...``.

Every command produces a report ``{"schema": 1, "command", "inputs",
"outputs", "status"}`` printed as JSON (``--json``) or as aligned text.
Exit status: 0 pass, 1 verification failure, 2 usage error.

Elements are written as ``a^K`` (power of the primitive element), an
integer below p, or F_p digits joined by ``:`` (constant term first).
Element lists separate entries with ``;``.  Codewords are printed in
base-field codes (integers below q).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import bch, criterion, families, goppa, linalg, tables
from .field import FieldTower, build_field, factorize, field_spec, format_element, parse_element
from .poly import (Poly, format_poly, is_irreducible, is_irreducible_over_prime, parse_poly,
                   roots_in_field)
from .rng import LCG

SCHEMA = 1
EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- argument helpers --------------------------------------------------------

def _tower(args) -> FieldTower:
    f = factorize(args.q) if args.q > 1 else {}
    if len(f) != 1:
        raise UsageError(f"q = {args.q} is not a prime power")
    (p, s), = f.items()
    modulus = None
    if getattr(args, "modulus", None):
        modulus = [int(c) for c in args.modulus.replace(";", ",").split(",")]
    try:
        return build_field(p, s, args.m, modulus)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _elements(ctx, text: str) -> list[int]:
    try:
        return [parse_element(ctx, e) for e in text.split(";") if e.strip()]
    except ValueError as exc:
        raise UsageError(f"bad element list: {exc}") from None


def _poly(ctx, text: str) -> Poly:
    try:
        return parse_poly(ctx, text)
    except ValueError as exc:
        raise UsageError(f"bad polynomial: {exc}") from None


def _ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(";", ",").split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def _field_inputs(ctx) -> dict:
    return {"q": ctx.q, "m": ctx.m, "field": field_spec(ctx)}


def _code_outputs(code: linalg.LinearCode, dist: linalg.DistanceResult | None,
                  emit_matrices: bool) -> dict:
    out = {"n": code.n, "k": code.k, "q": code.q, "designed_distance": code.designed_distance,
           "provenance": code.provenance}
    if dist is not None:
        out["distance"] = dist.as_dict()
        if dist.codeword is not None:
            out["min_weight_codeword"] = np.asarray(dist.codeword).tolist()
    if emit_matrices:
        out["parity_check"] = code.parity.tolist()
        out["generator"] = code.generator.tolist()
    return out


def _witness_outputs(ctx, w: criterion.CriterionWitness) -> dict:
    out = {"support_elems": [format_element(ctx, a) for a in w.support_elems],
           "ratios": [format_element(ctx, r) for r in w.ratios],
           "weight": w.weight}
    if w.positions is not None:
        out["positions"] = list(w.positions)
    if w.codeword is not None:
        out["codeword"] = w.codeword.tolist()
    return out


# -- commands ------------------------------------------------------------------

def cmd_field(args) -> tuple[dict, dict, str]:
    ctx = _tower(args)
    outputs = {
        "p": ctx.p, "s": ctx.s, "order": ctx.order,
        "modulus": list(ctx.modulus), "modulus_text": format_poly(Poly(ctx, ctx.modulus)),
        "prim": format_element(ctx, ctx.prim),
        "prim_order": ctx.order_of(ctx.prim),
        "subfield_generator": format_element(ctx, ctx.base_gen),
        "subfield_size": len(ctx.base_elements()),
    }
    ok = outputs["prim_order"] == ctx.order - 1 and outputs["subfield_size"] == ctx.q
    if args.element:
        x = _elements(ctx, args.element)[0]
        outputs["element"] = {
            "digits": format_element(ctx, x),
            "log": ctx.log(x) if x else None,
            "order": ctx.order_of(x) if x else None,
            "in_base_field": ctx.is_in_base_field(x),
            "norm": format_element(ctx, ctx.norm(x)),
        }
        if args.power:
            outputs["element"]["power_test"] = {"t": args.power,
                                                "is_power": bool(x) and ctx.kth_power_test(x, args.power)}
    return _field_inputs(ctx), outputs, "pass" if ok else "fail"


def cmd_poly(args):
    ctx = _tower(args)
    f = _poly(ctx, args.poly)
    outputs = {"poly": format_poly(f), "degree": f.degree}
    if f.degree >= 1:
        outputs["roots"] = [format_element(ctx, r) for r in roots_in_field(f)]
        outputs["irreducible"] = is_irreducible(f)
        if all(c < ctx.p for c in f.coeffs):
            outputs["irreducible_over_prime"] = is_irreducible_over_prime(f)
    status = "pass"
    if args.mpoly:
        try:
            cert = criterion.m_poly_check(f.monic(), ctx)
            outputs["m_poly"] = {"accepted": True, "b": format_element(ctx, cert.b),
                                 "w": format_element(ctx, cert.w),
                                 "recurrence_path": cert.recurrence_path}
        except criterion.MPolyRejected as exc:
            outputs["m_poly"] = {"accepted": False, "clause": exc.clause, "detail": exc.detail}
            status = "fail"
    inputs = {**_field_inputs(ctx), "poly": args.poly}
    return inputs, outputs, status


def _verify_distance(code, mode, budget, witness=None):
    if mode == "none":
        return None
    if mode == "witness":
        return linalg.min_distance(code, budget=0, witness=witness)
    return linalg.min_distance(code, budget=budget, witness=witness)


def cmd_goppa_build(args):
    ctx = _tower(args)
    G = _poly(ctx, args.G)
    support = _elements(ctx, args.support) if args.support else None
    try:
        spec = goppa.goppa_spec(ctx, G, support, designed_distance=args.designed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    code = goppa.build_code(spec)
    dist = _verify_distance(code, args.verify_distance, args.budget)
    inputs = {**_field_inputs(ctx), "G": format_poly(G), "support": args.support or "full"}
    return inputs, _code_outputs(code, dist, args.emit_matrices), "pass"


def cmd_bch_build(args):
    ctx = _tower(args)
    try:
        spec = bch.BCHSpec(ctx, args.delta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    code = bch.build_bch(spec)
    dist = _verify_distance(code, args.verify_distance, args.budget)
    out = _code_outputs(code, dist, args.emit_matrices)
    out["generator_polynomial"] = format_poly(code.meta["generator_polynomial"])
    out["bose_distance"] = bch.bose_distance(spec)
    out["defining_set_size"] = len(bch.defining_set(ctx.q, spec.n, args.delta))
    inputs = {**_field_inputs(ctx), "delta": args.delta}
    return inputs, out, "pass"


def cmd_bch_map_word(args):
    if args.indices is None and args.word is None:
        raise UsageError("give --indices or --word")
    out = {}
    if args.indices is not None:
        out["bch_indices"] = bch.goppa_bch_positions(_ints(args.indices), args.n)
    if args.word is not None:
        word = _ints(args.word)
        if len(word) != args.n:
            raise UsageError(f"word has length {len(word)}, expected {args.n}")
        out["bch_word"] = bch.goppa_bch_map(np.array(word)).tolist()
    inputs = {"n": args.n, "indices": args.indices, "word": args.word}
    return inputs, out, "pass"


def cmd_criterion_check(args):
    ctx = _tower(args)
    G = _poly(ctx, args.G)
    elems = _elements(ctx, args.elems)
    support = _elements(ctx, args.support) if args.support else goppa.full_support(ctx, G)
    inputs = {**_field_inputs(ctx), "G": format_poly(G), "elems": args.elems}
    try:
        w = criterion.check_support(G, elems, support=support)
    except criterion.SupportRejected as exc:
        return inputs, {"accepted": False, "failing_index": exc.index,
                        "failing_ratio": format_element(ctx, exc.value)}, "fail"
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    spec = goppa.GoppaSpec(ctx, tuple(support), G)
    out = {"accepted": True, "witness": _witness_outputs(ctx, w),
           "membership_congruence": goppa.membership_congruence(spec, w.codeword)}
    return inputs, out, "pass" if out["membership_congruence"] else "fail"


def cmd_criterion_sample(args):
    """R_j = -S_j on seeded random locator tuples for G = x^t."""
    ctx = _tower(args)
    rng = LCG(args.seed)
    pool = [x for x in range(ctx.order) if x not in (0, 1)]
    agree = 0
    for _ in range(args.count):
        xs = rng.sample(pool, args.t)
        _, ok = criterion.bch_locators(ctx, xs)
        agree += ok
    inputs = {**_field_inputs(ctx), "t": args.t, "count": args.count, "seed": args.seed}
    out = {"samples": args.count, "agreements": agree}
    return inputs, out, "pass" if agree == args.count else "fail"


def _family_params(args) -> dict:
    params = {k: getattr(args, k) for k in ("q", "m", "t", "r", "p", "delta")
              if getattr(args, k, None) is not None}
    return params


def _family_outputs(rep: families.FamilyReport, mode: str, budget) -> tuple[dict, bool]:
    ctx = rep.ctx
    member = rep.membership()
    dist = rep.distance(mode, budget)
    out = {
        "family": rep.family_tag,
        "params": {k: (format_element(ctx, v) if k in ("gamma", "b", "A", "lambda") else v)
                   for k, v in rep.params.items()},
        "code": _code_outputs(rep.code, dist, False),
        "claimed_d": rep.claimed_d,
        "witness": _witness_outputs(ctx, rep.witness),
        "codeword": rep.codeword.tolist(),
        "membership": member,
        "hypotheses": [{"hypothesis": h, "pass": ok} for h, ok in rep.hypothesis_log],
    }
    ok = (all(member.values()) and dist.exact and dist.lower == rep.claimed_d
          and rep.witness.weight == rep.claimed_d)
    return out, ok


def cmd_family_run(args):
    params = _family_params(args)
    try:
        rep = families.run_family(args.tag, **dict(params))
    except families.HypothesisError as exc:
        out = {"family": args.tag,
               "hypotheses": [{"hypothesis": h, "pass": ok} for h, ok in exc.log]}
        return {"tag": args.tag, **params}, out, "fail"
    except (KeyError, TypeError) as exc:
        raise UsageError(f"missing family parameter: {exc}") from None
    except ValueError as exc:
        return {"tag": args.tag, **params}, {"family": args.tag, "error": str(exc)}, "fail"
    out, ok = _family_outputs(rep, args.verify_distance, args.budget)
    return {"tag": args.tag, **params}, out, "pass" if ok else "fail"


def cmd_family_table(args):
    results = tables.reproduce(args.table, args.max_length, args.max_field,
                               args.verify_distance, args.budget)
    rows = [r.as_dict(timing=args.timing) for r in results]
    passed = sum(r.passed for r in results)
    out = {"rows": rows, "passed": passed, "total": len(results),
           "text": tables.format_results(results, timing=args.timing)}
    inputs = {"table": args.table, "max_length": args.max_length, "max_field": args.max_field,
              "verify_distance": args.verify_distance}
    status = "pass" if passed == len(results) else ("fail" if passed == 0 else "partial")
    return inputs, out, status


# -- parser --------------------------------------------------------------------

def _add_field_args(p, modulus=True):
    p.add_argument("--q", type=int, required=True, help="base field size (prime power)")
    p.add_argument("--m", type=int, required=True, help="extension degree over F_q")
    if modulus:
        p.add_argument("--modulus", help="F_p coefficients of the defining polynomial, constant first")


def _add_distance_arg(p, default):
    p.add_argument("--verify-distance", choices=["witness", "exhaustive", "none"], default=default)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--budget", type=int, default=None,
                        help="enumeration budget in codewords (default GOPPA_BUDGET or 2^22)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--timing", action="store_true", help="include wall-clock timings")
    common.add_argument("--emit-matrices", action="store_true")

    parser = _Parser(prog="goppabch", description="Goppa and BCH codes with d equal to the designed distance.",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("field", parents=[common], help="describe F_q < F_{q^m}")
    _add_field_args(p)
    p.add_argument("--element", help="element to describe")
    p.add_argument("--power", type=int, help="test whether --element is a t-th power")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("poly", parents=[common], help="roots, irreducibility, and the M-polynomial test")
    _add_field_args(p)
    p.add_argument("--poly", required=True)
    p.add_argument("--mpoly", action="store_true", help="run the x(x-1)M' = w mod M test")
    p.set_defaults(func=cmd_poly)

    g = sub.add_parser("goppa", help="Goppa codes").add_subparsers(dest="action", parser_class=_Parser)
    p = g.add_parser("build", parents=[common])
    _add_field_args(p)
    p.add_argument("--G", required=True, help="Goppa polynomial, e.g. 'x^2+a^2'")
    p.add_argument("--support", help="';'-separated support (default: every non-root)")
    p.add_argument("--designed", type=int, help="override the designed distance")
    _add_distance_arg(p, "exhaustive")
    p.set_defaults(func=cmd_goppa_build)

    b = sub.add_parser("bch", help="narrow-sense primitive BCH codes").add_subparsers(
        dest="action", parser_class=_Parser)
    p = b.add_parser("build", parents=[common])
    _add_field_args(p)
    p.add_argument("--delta", type=int, required=True)
    _add_distance_arg(p, "exhaustive")
    p.set_defaults(func=cmd_bch_build)
    p = b.add_parser("map-word", parents=[common], help="Goppa coordinates to BCH coordinates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--indices", help="comma-separated Goppa support indices")
    p.add_argument("--word", help="comma-separated Goppa-ordered word")
    p.set_defaults(func=cmd_bch_map_word)

    c = sub.add_parser("criterion", help="weight-(t+1) witnesses").add_subparsers(
        dest="action", parser_class=_Parser)
    p = c.add_parser("check", parents=[common])
    _add_field_args(p)
    p.add_argument("--G", required=True)
    p.add_argument("--elems", required=True, help="';'-separated t+1 support elements")
    p.add_argument("--support", help="';'-separated code support (default: full)")
    p.set_defaults(func=cmd_criterion_check)
    p = c.add_parser("sample", parents=[common], help="check R_j = -S_j on random locators")
    _add_field_args(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--count", type=int, default=100)
    p.set_defaults(func=cmd_criterion_sample)

    f = sub.add_parser("family", help="code families and table reproduction").add_subparsers(
        dest="action", parser_class=_Parser)
    p = f.add_parser("run", parents=[common])
    p.add_argument("tag", choices=families.FAMILY_TAGS)
    for name in ("q", "m", "t", "r", "p", "delta"):
        p.add_argument(f"--{name}", type=int)
    _add_distance_arg(p, "witness")
    p.set_defaults(func=cmd_family_run)
    for name in tables.TABLES:
        p = f.add_parser(name, parents=[common], help=f"reproduce {name}")
        p.add_argument("--max-length", type=int)
        p.add_argument("--max-field", type=int, default=tables.MAX_FIELD)
        _add_distance_arg(p, "witness")
        p.set_defaults(func=cmd_family_table, table=name)
    return parser


# -- output --------------------------------------------------------------------

def _to_text(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        width = max((len(str(k)) for k in value), default=0)
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(i, (dict, list)) for i in
                                                         (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{str(k)}:")
                lines.extend(_to_text(v, indent + 1))
            elif isinstance(v, dict):
                lines.append(f"{pad}{str(k)}:")
                lines.extend(_to_text(v, indent + 1))
            else:
                lines.append(f"{pad}{str(k).ljust(width)}  {_scalar(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict):
                lines.append(f"{pad}- " + ", ".join(f"{k}={_scalar(v)}" for k, v in item.items()))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(pad + _scalar(value))
    return lines


def _scalar(v) -> str:
    if isinstance(v, list):
        return " ".join(str(i) for i in v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    return "-" if v is None else str(v)


def render_text(report: dict) -> str:
    outputs = dict(report["outputs"])
    table_text = outputs.pop("text", None)
    if table_text is not None:
        outputs.pop("rows", None)
    lines = [f"command  {report['command']}", f"status   {report['status']}"]
    lines += ["inputs:"] + _to_text(report["inputs"], 1)
    lines += ["outputs:"] + _to_text(outputs, 1)
    if table_text:
        lines += ["", table_text]
    return "\n".join(lines)


def _json_default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"cannot serialize {type(o).__name__}")


def run(argv=None, stdout=None) -> int:
    """Parse, execute, print the report, return the exit code."""
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not hasattr(args, "func"):
            raise UsageError("missing subcommand")
        start = time.perf_counter()
        inputs, outputs, status = args.func(args)
        elapsed = time.perf_counter() - start
    except UsageError as exc:
        print(f"goppabch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    command = " ".join(p for p in (args.command, getattr(args, "action", None)) if p)
    report = {"schema": SCHEMA, "command": command, "argv": argv, "inputs": inputs,
              "outputs": outputs, "status": status}
    if args.timing:
        report["seconds"] = round(elapsed, 3)
    if args.json:
        print(json.dumps(report, indent=2, default=_json_default), file=stdout)
    else:
        print(render_text(report), file=stdout)
    return EXIT_PASS if status == "pass" else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
