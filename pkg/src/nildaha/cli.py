"""
Command-line front end.

    nildaha root show --type G2
    nildaha weyl length --type A1 --elem '{"t":[2],"w":[[1]]}'
    nildaha nh verify th0 --type A2

Exit status is 0 when everything checks out, 1 when a verification fails or
an element is rejected, and 2 for usage errors and malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .exactalg import Poly, RootFraction, parse_poly
from .nilhecke import NilHeckeElement, NotInNilHecke, nil_hecke
from .rootdata import build_root_datum
from .skew import SkewElement
from .suites import SUITES, Options, run_case, run_suite
from .weyl import ExtAffineElement, weyl_group

__all__ = ["main", "run", "UsageError"]


class UsageError(Exception):
    """Bad input; reported with exit status 2."""


def _load_json(text: str, what: str):
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise UsageError(f"malformed JSON for {what} at line {err.lineno}, column {err.colno} "
                         f"(char {err.pos}): {err.msg}") from None


def _datum(label: str):
    try:
        return build_root_datum(label)
    except ValueError as err:
        raise UsageError(str(err)) from None


def _group_element(args, text: str, what: str = "--elem") -> ExtAffineElement:
    obj = _load_json(text, what)
    try:
        w = ExtAffineElement.from_json(obj)
    except (KeyError, TypeError, ValueError) as err:
        raise UsageError(f"bad group element for {what}: {err}") from None
    if w.rank != args.group.rank:
        raise UsageError(f"{what} has rank {w.rank}, the datum has rank {args.group.rank}")
    return w


def _coeff_json(term: dict, n: int) -> RootFraction:
    c = term["coeff"]
    if isinstance(c, str):
        return RootFraction.from_poly(parse_poly(c, n))
    return RootFraction.from_json(c, n)


def _skew(args, text: str, what: str) -> SkewElement:
    obj = _load_json(text, what)
    g = args.group
    try:
        out = SkewElement.zero(g)
        for term in obj["terms"]:
            w = ExtAffineElement.from_json(term["group"])
            if w.rank != g.rank:
                raise ValueError("group element rank does not match the datum")
            out = out + SkewElement.element(g, w, _coeff_json(term, g.rank + 1))
        return out
    except (KeyError, TypeError, ValueError) as err:
        raise UsageError(f"bad skew element for {what}: {err!r}") from None


def _nh(args, text: str, what: str) -> NilHeckeElement:
    obj = _load_json(text, what)
    H = nil_hecke(args.type)
    try:
        terms = []
        for term in obj["terms"]:
            c = term["coeff"]
            if isinstance(c, str):
                c = parse_poly(c, H.nvars).to_json()
            terms.append({"index": term["index"], "coeff": c})
        return NilHeckeElement.from_json(H, {"terms": terms, "hbar": obj.get("hbar")})
    except (KeyError, TypeError, ValueError) as err:
        raise UsageError(f"bad nil-Hecke element for {what}: {err!r}") from None


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- commands --------------------------------------------------------------------


def cmd_root_show(args) -> int:
    d = args.datum
    roots = ", ".join(str(list(b.simple_coords)) for b in d.positive_roots)
    text = "\n".join([
        f"type {d.cartan_type}, rank {d.rank}",
        "cartan " + json.dumps([list(r) for r in d.cartan]),
        f"positive roots ({len(d.positive_roots)}, simple-root coordinates): {roots}",
        f"highest root {list(d.highest_root.simple_coords)}",
        f"affine node reflects in the root {list(d.affine_root.simple_coords)}",
    ])
    _emit(args, d.to_json(), text)
    return 0


def cmd_weyl_reduced_word(args) -> int:
    w = _group_element(args, args.elem)
    omega, word = args.group.reduced_word(w)
    _emit(args, {"omega": omega.to_json(), "word": word},
          f"omega = {json.dumps(omega.to_json())}\nword = {word}")
    return 0


def cmd_weyl_length(args) -> int:
    w = _group_element(args, args.elem)
    n = args.group.length(w)
    _emit(args, {"length": n}, str(n))
    return 0


def cmd_skew_mul(args) -> int:
    prod = _skew(args, args.a, "--a") * _skew(args, args.b, "--b")
    _emit(args, prod.to_json(), str(prod))
    return 0


def cmd_skew_act(args) -> int:
    u = _skew(args, args.elem, "--elem")
    try:
        f = parse_poly(args.poly, args.group.rank + 1)
    except ValueError as err:
        raise UsageError(f"bad polynomial for --poly: {err}") from None
    out = u.act(f)
    _emit(args, out.to_json(), str(out))
    return 0


def cmd_nh_mul(args) -> int:
    prod = _nh(args, args.a, "--a") * _nh(args, args.b, "--b")
    _emit(args, prod.to_json(), str(prod))
    return 0


def cmd_nh_membership(args) -> int:
    u = _skew(args, args.elem, "--elem")
    H = nil_hecke(args.type)
    try:
        got = H.membership(u)
    except NotInNilHecke as err:
        _emit(args, {"member": False, "witness": err.witness()},
              f"rejected: coefficient {err.coeff} at {json.dumps(err.index.to_json())} "
              "is not a polynomial")
        return 1
    _emit(args, {"member": True, "element": got.to_json()}, f"member: {got}")
    return 0


def cmd_nh_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    if args.case is not None:
        if args.suite == "all":
            raise UsageError("--case needs a specific suite")
        case = _load_json(args.case, "--case")
        if isinstance(case, dict) and "case" in case:  # a whole counterexample record
            args.type = case.get("type", args.type)
            case = case["case"]
        if args.type is None:
            raise UsageError("--case needs --type")
        _datum(args.type)
        try:
            detail = run_case(args.suite, args.type, case)
        except (KeyError, TypeError) as err:
            raise UsageError(f"case does not fit suite {args.suite}: {err!r}") from None
        payload = {"suite": args.suite, "type": args.type, "case": case,
                   "ok": detail is None, "detail": detail}
        _emit(args, payload, f"{args.suite}: " + ("OK" if detail is None else
                                                  "FAIL " + json.dumps(detail, sort_keys=True)))
        return 0 if detail is None else 1
    opts = Options(args.max_length, args.max_degree, args.seed, args.budget_seconds, args.samples)
    reports = []
    for name in names:
        types = [args.type] if args.type else list(SUITES[name].types)
        for label in types:
            _datum(label)
            reports.append(run_suite(name, label, opts))
    show_datum = len(reports) > 1
    if args.json:
        print(json.dumps([r.to_json(args.timing) for r in reports], sort_keys=True))
    else:
        for r in reports:
            print(r.text(args.timing, show_datum))
    return 0 if all(r.ok for r in reports) else 1


# -- parser -------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--type", help="Cartan type label such as A2 or G2")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = _Parser(prog="nildaha", description="Exact nil-Hecke and nil-DAHA computations.")
    top = p.add_subparsers(dest="area", required=True, parser_class=_Parser)

    root = top.add_parser("root").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    root.add_parser("show", parents=[common]).set_defaults(func=cmd_root_show, need_type=True)

    weyl = top.add_parser("weyl").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, func in [("reduced-word", cmd_weyl_reduced_word), ("length", cmd_weyl_length)]:
        sp = weyl.add_parser(name, parents=[common])
        sp.add_argument("--elem", required=True, help='{"t": [...], "w": [[...]]}')
        sp.set_defaults(func=func, need_type=True)

    skew = top.add_parser("skew").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = skew.add_parser("mul", parents=[common])
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(func=cmd_skew_mul, need_type=True)
    sp = skew.add_parser("act", parents=[common])
    sp.add_argument("--elem", required=True)
    sp.add_argument("--poly", required=True, help="e.g. '3/2*x1^2*h - x2'")
    sp.set_defaults(func=cmd_skew_act, need_type=True)

    nh = top.add_parser("nh").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = nh.add_parser("mul", parents=[common])
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(func=cmd_nh_mul, need_type=True)
    sp = nh.add_parser("membership", parents=[common])
    sp.add_argument("--elem", required=True, help="skew element JSON")
    sp.set_defaults(func=cmd_nh_membership, need_type=True)
    sp = nh.add_parser("verify", parents=[common])
    sp.add_argument("suite", choices=sorted(SUITES) + ["all"])
    sp.add_argument("--max-length", type=int)
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--budget-seconds", type=float, default=120.0)
    sp.add_argument("--case", help="rerun a single case (JSON)")
    sp.add_argument("--timing", action="store_true", help="include wall-clock durations")
    sp.set_defaults(func=cmd_nh_verify, need_type=False)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.need_type:
            if not args.type:
                raise UsageError("--type is required")
            args.datum = _datum(args.type)
            args.group = weyl_group(args.type)
        return args.func(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
