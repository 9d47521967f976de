"""Command-line front end: evaluate operations, run verification suites.

Exit codes: 0 success / all properties pass, 1 failed verification property,
2 argument errors (argparse), 3 precondition violations raised by the engine.
Configuration precedence: flags > GT_ENGINE_CONFIG (path to a JSON file with
keys like "n", "degree", "seed") > built-in defaults (n=2, degree=6).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import jsonio, verify
from .cobracket import (
    FROZEN_CONVENTION,
    PRINTED_CONVENTION,
    cojacobi_defect,
    delta_std,
    mu_std_closed,
    mu_std_pipeline,
)
from .cyclic import CyclicSeries, cyclic_project
from .hopf import GroupWord, antipode, bch, bernoulli, coproduct, exp, s_series, theta_std
from .intersect import k_tensor, kappa_std, rho_std, rho_theta
from .pairing import (
    embed,
    mt_product,
    q_automorphism,
    theorem_y_lhs,
    theorem_y_rhs,
    xi,
)
from .tensor import TensorSeries, genus0_context, symplectic_context

DEFAULTS = {"n": 2, "degree": 6, "genus": 1, "seed": 0}


def _load_config() -> dict:
    cfg = dict(DEFAULTS)
    path = os.environ.get("GT_ENGINE_CONFIG")
    if path:
        try:
            with open(path) as fh:
                cfg.update(json.load(fh))
        except (OSError, ValueError) as e:
            raise SystemExit(f"gt-engine: cannot read GT_ENGINE_CONFIG: {e}")
    return cfg


def _parse_word(ctx, text: str) -> tuple:
    if not text:
        return ()
    return tuple(ctx.parse_letter(tok) for tok in text.split(","))


def _parse_group_word(text: str) -> GroupWord:
    sylls = []
    if text:
        for tok in text.split(","):
            if "^" in tok:
                gen, e = tok.split("^")
                sylls.append((int(gen.lstrip("x")), int(e)))
            else:
                sylls.append((int(tok.lstrip("x")), 1))
    return GroupWord.of(sylls)


def _convention(name: str):
    return {"frozen": FROZEN_CONVENTION, "printed": PRINTED_CONVENTION}[name]


def _emit(obj, fmt: str) -> None:
    if fmt == "json":
        print(jsonio.dumps(obj, indent=2))
    else:
        if isinstance(obj, dict):
            for k, v in obj.items():
                print(f"{k}: {v!r}" if not isinstance(v, (str, bool, int)) else f"{k}: {v}")
        else:
            print(repr(obj))


def _genus0(args):
    return genus0_context(args.n, args.degree)


def _symplectic(args):
    return symplectic_context(args.genus, args.degree)


def _eval_op(args) -> object:
    op = args.op
    if op == "product":
        ctx = _genus0(args) if args.genus is None else _symplectic(args)
        u = TensorSeries.from_word(ctx, _parse_word(ctx, args.u))
        v = TensorSeries.from_word(ctx, _parse_word(ctx, args.v))
        return u * v
    if op == "coproduct":
        ctx = _genus0(args)
        return coproduct(TensorSeries.from_word(ctx, _parse_word(ctx, args.word)))
    if op == "antipode":
        ctx = _genus0(args)
        return antipode(TensorSeries.from_word(ctx, _parse_word(ctx, args.word)))
    if op == "exp":
        ctx = _genus0(args)
        return exp(TensorSeries.from_word(ctx, _parse_word(ctx, args.word)))
    if op == "bch":
        ctx = _genus0(args)
        u = TensorSeries.from_word(ctx, _parse_word(ctx, args.u))
        v = TensorSeries.from_word(ctx, _parse_word(ctx, args.v))
        return bch(u, v)
    if op == "theta":
        return theta_std(_genus0(args), _parse_group_word(args.word))
    if op == "xi":
        return xi(_genus0(args))
    if op == "q":
        ctx = _genus0(args)
        return q_automorphism(TensorSeries.from_word(ctx, _parse_word(ctx, args.word)))
    if op == "embed":
        ctx = _genus0(args)
        return embed(TensorSeries.from_word(ctx, _parse_word(ctx, args.word)))
    if op == "mt":
        ctx = _genus0(args) if args.genus is None else _symplectic(args)
        u = TensorSeries.from_word(ctx, _parse_word(ctx, args.u))
        v = TensorSeries.from_word(ctx, _parse_word(ctx, args.v))
        return mt_product(u, v)
    if op == "theorem-y":
        ctx = _genus0(args)
        lhs, rhs = theorem_y_lhs(ctx), theorem_y_rhs(ctx)
        return {
            "lhs": lhs,
            "rhs": rhs,
            "verdict": "EQUAL" if lhs == rhs else "DIFFER",
        }
    if op == "rho-std":
        ctx = _genus0(args)
        u = TensorSeries.from_word(ctx, _parse_word(ctx, args.u))
        v = TensorSeries.from_word(ctx, _parse_word(ctx, args.v))
        return rho_std(u, v)
    if op == "rho-theta":
        # boundary-log element taken from the embedded BCH fold
        gctx = _genus0(args)
        om = embed(xi(gctx))
        sctx = om.ctx
        u = TensorSeries.from_word(sctx, _parse_word(sctx, args.u))
        v = TensorSeries.from_word(sctx, _parse_word(sctx, args.v))
        return rho_theta(om, u, v)
    if op == "k-tensor":
        return k_tensor(_genus0(args), args.k, args.l)
    if op == "kappa":
        ctx = _genus0(args)
        return kappa_std(TensorSeries.letter(ctx, args.k), TensorSeries.letter(ctx, args.l))
    if op == "mu":
        ctx = _genus0(args)
        fn = mu_std_closed if args.path == "closed" else mu_std_pipeline
        return fn(ctx, _parse_word(ctx, args.word), _convention(args.convention))
    if op == "delta":
        ctx = _genus0(args)
        return delta_std(
            ctx, _parse_word(ctx, args.word), _convention(args.convention), args.path
        )
    if op == "cojacobi":
        ctx = _genus0(args)
        neck = CyclicSeries.necklace(ctx, _parse_word(ctx, args.word))
        return cojacobi_defect(neck, _convention(args.convention), args.path)
    if op == "bernoulli":
        return {"index": args.k, "value": bernoulli(args.k)}
    if op == "s-series":
        return {"coefficients": [str(c) for c in s_series(args.degree).coeffs]}
    raise SystemExit(2)


EVAL_OPS = [
    "product", "coproduct", "antipode", "exp", "bch", "theta", "xi", "q",
    "embed", "mt", "theorem-y", "rho-std", "rho-theta", "k-tensor", "kappa",
    "mu", "delta", "cojacobi", "bernoulli", "s-series",
]


def build_parser(cfg: dict) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gt-engine",
        description="Exact engine for truncated tensor algebras: Hopf operations, "
        "the contraction pairing, intersection forms, and the cobracket on cyclic words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one operation and print the result")
    ev.add_argument("op", choices=EVAL_OPS)
    ev.add_argument("--word", default="", help="comma-separated letters, e.g. 1,2,1 or A1,B1")
    ev.add_argument("--u", default="", help="first word argument")
    ev.add_argument("--v", default="", help="second word argument")
    ev.add_argument("--k", type=int, default=1, help="letter index argument")
    ev.add_argument("--l", type=int, default=1, help="second letter index argument")
    ev.add_argument("--n", type=int, default=cfg["n"], help="number of genus-0 letters")
    ev.add_argument("--genus", type=int, default=None, help="symplectic genus (selects symplectic mode)")
    ev.add_argument("--degree", type=int, default=cfg["degree"], help="truncation degree")
    ev.add_argument("--path", choices=["closed", "pipeline"], default="closed")
    ev.add_argument("--convention", choices=["frozen", "printed"], default="frozen")
    ev.add_argument("--format", choices=["json", "text"], default="json")

    vf = sub.add_parser("verify", help="run a verification suite")
    vf.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    vf.add_argument("--n", type=int, default=cfg["n"])
    vf.add_argument("--degree", type=int, default=cfg["degree"])
    vf.add_argument("--seed", type=int, default=cfg["seed"])
    vf.add_argument("--instances", type=int, default=None)
    vf.add_argument("--format", choices=["json", "text", "markdown"], default="json")
    return parser


def main(argv=None) -> int:
    cfg = _load_config()
    parser = build_parser(cfg)
    args = parser.parse_args(argv)

    if args.command == "eval":
        try:
            result = _eval_op(args)
        except ValueError as e:
            print(f"gt-engine: precondition violation: {e}", file=sys.stderr)
            return 3
        if args.op == "theorem-y" and args.format == "text":
            print("lhs:", repr(result["lhs"]))
            print("rhs:", repr(result["rhs"]))
            print(result["verdict"])
        else:
            _emit(result, args.format)
        return 0

    if args.command == "verify":
        if args.format == "markdown":
            if args.suite != "sign-audit":
                print("gt-engine: markdown output is only for the sign-audit suite", file=sys.stderr)
                return 2
            print(verify.audit_markdown(args.n, args.degree))
            return 0
        try:
            reports = verify.run_suite(args.suite, args.n, args.degree, args.seed, args.instances)
        except ValueError as e:
            print(f"gt-engine: precondition violation: {e}", file=sys.stderr)
            return 3
        all_pass = all(r.passed for r in reports)
        if args.format == "json":
            payload = [r.to_dict() for r in reports]
            print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
        else:
            for r in reports:
                for p in r.properties:
                    print(f"{r.suite}: {p.name}: {p.status}")
                    if p.counterexample is not None:
                        print(f"  counterexample: {json.dumps(p.counterexample)}")
        return 0 if all_pass else 1

    return 2


if __name__ == "__main__":
    sys.exit(main())
