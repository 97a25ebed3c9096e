"""Command-line front end.

Exit status: 0 ok, 1 a verification failed, 2 bad input, 3 enumeration cap hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from imbalance import balance, domino, poset, promotion, shapes, verify
from imbalance.kernels import CapExceeded
from imbalance.polynomials import QPoly

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_poset(path: str):
    P, omega = poset.parse_poset(_read(path))
    return P, omega


def _parse_ext(P, text: str):
    try:
        f = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"cannot parse extension {text!r}") from None
    if not poset.is_linear_extension(P, f):
        raise InputError(f"{text} is not a linear extension of the poset")
    return f


def _poly(p: QPoly) -> list[int]:
    return p.to_list()


# -- verbs -------------------------------------------------------------------


def cmd_poset_stats(args) -> tuple[Any, int]:
    P, omega = _load_poset(args.file)
    natural = poset.natural_labeling(P)
    if omega is None:
        omega = natural
    count, I, W = poset.extension_stats(P, omega)
    _, _, W_nat = poset.extension_stats(P, natural)
    consistent = promotion.is_consistent(P)
    out = {
        "n": P.n,
        "covers": [list(c) for c in sorted(P.covers)],
        "omega": list(omega),
        "natural": poset.is_natural(P, omega),
        "extensions": count,
        "inv_poly": _poly(I),
        "maj_poly": _poly(W),
        "I_at_minus1": I(-1),
        "W_at_minus1": W(-1),
        "sign_balanced": I(-1) == 0,
        "maj_balanced": W(-1) == 0,
        "maj_balanced_natural": W_nat(-1) == 0,
        "gamma": promotion.gamma(P),
        "delta": promotion.delta_stat(P),
        "consistent": consistent,
        "dual_consistent": promotion.is_dual_consistent(P),
        "maximal_chain_lengths": sorted(poset.maximal_chain_lengths(P)),
        "promotion_parity": promotion.promotion_parity_class(P).value,
        "evacuation_parity": promotion.evac_parity(P).value if consistent else None,
        "p_domino_tableaux": domino.count_p_domino(P),
        "two_minimal_below_every_nonminimal": poset.ruskey_hypothesis(P),
    }
    return out, EXIT_OK


def _shape_imbalance(lam, cap: int) -> dict:
    rec = shapes.inv_poly_shape(lam)
    methods: dict[str, int] = {"recursion": rec(-1)}
    polys = [rec]
    if rec(1) <= cap:
        P, omega = shapes.shape_poset(lam)
        brute = poset.inv_poly(P, omega, cap)
        methods["brute_force"] = brute(-1)
        polys.append(brute)
    if sum(lam) % 2 == 0 and rec(1) <= cap:
        methods["domino"] = domino.imbalance_domino(lam)
    agree = len(set(methods.values())) == 1 and all(p == rec for p in polys)
    return {"I_at_minus1": rec(-1), "method_agreement": agree, "methods": methods, "inv_poly": _poly(rec)}


def cmd_shape(args) -> tuple[Any, int]:
    sk = shapes.parse_shape(args.shape)
    cap = poset.extension_cap()
    if sk.inner:
        P, omega = shapes.shape_poset(sk)
        count, I, W = poset.extension_stats(P, omega, cap)
        out = {
            "outer": list(sk.outer), "inner": list(sk.inner), "size": sk.size,
            "extensions": count, "inv_poly": _poly(I), "I_at_minus1": I(-1),
        }
        return out, EXIT_OK
    lam = sk.outer
    info = _shape_imbalance(lam, cap)
    if args.imbalance:
        out = {"lambda": list(lam), "I_at_minus1": info["I_at_minus1"],
               "method_agreement": info["method_agreement"]}
        return out, EXIT_OK if info["method_agreement"] else EXIT_FAIL
    core = shapes.two_core(lam)
    out = {
        "lambda": list(lam),
        "size": sum(lam),
        "conjugate": list(shapes.conjugate(lam)),
        "f_lambda": shapes.inv_poly_shape(lam)(1),
        **info,
        "two_core": list(core),
        "v": shapes.v_stat(lam),
        "d": shapes.d_stat(lam),
        "r": shapes.r_stat(lam) if not core and "domino" in info["methods"] else None,
        "content_sum": shapes.content_sum(lam),
        "parity_quadruple": list(shapes.a_lambda_quadruple(lam)),
        "hook": shapes.is_hook(lam),
    }
    return out, EXIT_OK if info["method_agreement"] else EXIT_FAIL


def cmd_region(args) -> tuple[Any, int]:
    S = balance.parse_region(_read(args.file))
    P = balance.region_poset(S)
    omega = balance.schur_labeling(S)
    count, _, W = poset.extension_stats(P, omega)
    out: dict[str, Any] = {
        "cells": [list(c) for c in balance.region_cells(S)],
        "size": P.n,
        "covers": [list(c) for c in sorted(P.covers)],
        "schur_labeling": list(omega),
        "extensions": count,
        "maj_poly": _poly(W),
        "W_at_minus1": W(-1),
    }
    if P.n % 2:
        out["p_domino_tableaux"] = domino.count_p_domino(P)
        return out, EXIT_OK
    signed, tableaux = balance.slabps_check(S)
    tilable = next(balance.tilings(S), None) is not None
    out.update({
        "tilable": tilable,
        "sign": balance.region_sign(S) if tilable else None,
        "signed_W_at_minus1": signed,
        "p_domino_tableaux": tableaux,
        "pass": signed == tableaux,
    })
    return out, EXIT_OK if signed == tableaux else EXIT_FAIL


def cmd_promote(args) -> tuple[Any, int]:
    P, _ = _load_poset(args.file)
    if args.ext:
        f = _parse_ext(P, args.ext)
        g = f
        for _ in range(args.times):
            g = promotion.promote(P, g)
        chain = promotion.promotion_chain(P, f)
        return {
            "f": list(f),
            "chain": list(chain.elements),
            "chain_length": chain.length,
            "times": args.times,
            "promoted": list(g),
            "parity_change": promotion.parity_of_change(f, g),
        }, EXIT_OK
    exts = list(poset.linear_extensions(P))
    images = [promotion.promote(P, f) for f in exts]
    changes = sorted({promotion.parity_of_change(f, g) for f, g in zip(exts, images)})
    cls = promotion.promotion_parity_class(P)
    bijective = sorted(images) == sorted(exts)
    agrees = {
        promotion.Parity.REVERSING: changes == [1],
        promotion.Parity.PRESERVING: changes == [0],
        promotion.Parity.NEITHER: True,
    }[cls]
    out = {
        "extensions": len(exts),
        "bijective": bijective,
        "parity_class": cls.value,
        "observed_parity_changes": changes,
        "pass": bijective and agrees,
    }
    return out, EXIT_OK if out["pass"] else EXIT_FAIL


def cmd_evacuate(args) -> tuple[Any, int]:
    P, _ = _load_poset(args.file)
    consistent = promotion.is_consistent(P)
    predicted = promotion.evac_parity(P).value if consistent else None
    if args.ext:
        f = _parse_ext(P, args.ext)
        e = promotion.evacuate(P, f)
        return {
            "f": list(f),
            "evacuated": list(e),
            "involution": promotion.evacuate(P, e) == f,
            "parity_change": promotion.parity_of_change(f, e),
            "predicted_parity": predicted,
        }, EXIT_OK
    exts = list(poset.linear_extensions(P))
    images = [promotion.evacuate(P, f) for f in exts]
    involution = all(promotion.evacuate(P, e) == f for f, e in zip(exts, images))
    changes = sorted({promotion.parity_of_change(f, e) for f, e in zip(exts, images)})
    agrees = predicted is None or changes == [int(predicted == "reversing")]
    out = {
        "extensions": len(exts),
        "involution": involution,
        "consistent": consistent,
        "predicted_parity": predicted,
        "observed_parity_changes": changes,
        "pass": involution and agrees,
    }
    return out, EXIT_OK if out["pass"] else EXIT_FAIL


def cmd_series(args) -> tuple[Any, int]:
    if not 0 <= args.n_max <= 64:
        raise InputError("--n-max must lie in 0..64")
    return {"kind": args.kind, "n_max": args.n_max,
            "coefficients": shapes.count_series(args.kind, args.n_max)}, EXIT_OK


def cmd_verify(args) -> tuple[Any, int]:
    cfg = verify.Config(
        seed=args.seed, small=args.small, timing=args.timing,
        n=args.n, max_m=args.max_m, samples=args.samples,
    )
    try:
        records = verify.run_suite(args.name, cfg)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    failed = sum(1 for r in records if not r["pass"])
    print(f"{args.name}: {len(records) - failed}/{len(records)} passed (seed {args.seed})", file=sys.stderr)
    return records, EXIT_OK if failed == 0 else EXIT_FAIL


# -- output ------------------------------------------------------------------


def _plain(obj) -> str:
    if isinstance(obj, list) and obj and isinstance(obj[0], dict) and "identity" in obj[0]:
        lines = []
        for r in obj:
            tag = "PASS" if r["pass"] else "FAIL"
            param = json.dumps(r["parameter"], separators=(",", ":"))
            line = f"{tag}  {r['identity']}  {param}"
            if not r["pass"]:
                line += f"  expected={json.dumps(r['expected'])} actual={json.dumps(r['actual'])}"
            if r["millis"] is not None:
                line += f"  {r['millis']}ms"
            lines.append(line)
        return "\n".join(lines)
    if isinstance(obj, dict):
        width = max((len(k) for k in obj), default=0)
        return "\n".join(
            f"{k:<{width}}  {v if isinstance(v, (int, str)) or v is None else json.dumps(v)}"
            for k, v in obj.items()
        )
    return json.dumps(obj)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--plain", action="store_true", help="plain-text table instead of JSON")

    parser = argparse.ArgumentParser(
        prog="imbalance",
        description="Sign and maj imbalance of posets and partition shapes.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("poset-stats", parents=[common], help="statistics of a poset file")
    p.add_argument("file", help="poset file ('-' for stdin)")
    p.set_defaults(func=cmd_poset_stats)

    p = sub.add_parser("shape", parents=[common], help="imbalance and statistics of a shape")
    p.add_argument("shape", help="partition like 3,3 or skew shape like 4,3/2")
    p.add_argument("--imbalance", action="store_true", help="only I at q=-1 and method agreement")
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("region", parents=[common], help="square region with its Schur labeling")
    p.add_argument("file", help="region file of 'row col' lines")
    p.set_defaults(func=cmd_region)

    for verb, func, what in (("promote", cmd_promote, "promotion"), ("evacuate", cmd_evacuate, "evacuation")):
        p = sub.add_parser(verb, parents=[common], help=f"{what} of one or all linear extensions")
        p.add_argument("file", help="poset file")
        p.add_argument("--ext", help="extension as comma-separated values f(0),...,f(n-1)")
        if verb == "promote":
            p.add_argument("--times", type=int, default=1, help="apply promotion this many times")
        p.set_defaults(func=func)

    p = sub.add_parser("series", parents=[common], help="coefficients of a counting series")
    p.add_argument("kind", choices=["core_le_1", "a_even_f", "t_n", "g_n"])
    p.add_argument("--n-max", type=int, default=20)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--seed", type=int, default=0, help="RNG seed for random instances (default 0)")
    p.add_argument("name", help="suite name, or 'all': " + ", ".join(verify.SUITES))
    p.add_argument("--n", type=int, help="size bound of the suite")
    p.add_argument("--max-m", type=int, help="bound on m for kcor and operator suites")
    p.add_argument("--samples", type=int, help="number of random posets")
    p.add_argument("--small", action="store_true", help="desk-scale bounds")
    p.add_argument("--timing", action="store_true", help="record per-check millis (output no longer reproducible)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result, status = args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, poset.PosetError, shapes.ShapeError, balance.RegionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(_plain(result) if args.plain else json.dumps(result, indent=2))
    return status


if __name__ == "__main__":
    sys.exit(main())
