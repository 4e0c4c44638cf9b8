"""Command-line interface: symbolic products, relation generation,
numeric evaluation, identity verification and the golden relation corpus.

Exit codes: 0 success / verified, 1 verification failure, 2 usage error.
All output is deterministic; floats are rendered with 17 significant
digits.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from fractions import Fraction

from . import identity_engine, mzv_calculus as mzv, numeric_eval, operator_gallery as ops
from .coefficients import PolyQ, RatFuncQ
from .letters import COMPOSITION, QLETTERS, WORD
from .mzv_calculus import (
    InadmissibleError,
    Relation,
    composition_str,
    is_admissible,
    parse_composition,
    weight as comp_weight,
)
from .numeric_eval import EvalConfig
from .tensor_algebra import mixable_shuffle

RESIDUAL_TOL = 1e-4


def canonical_json(obj) -> str:
    """Deterministic JSON with floats at 17 significant digits."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, float):
        return f"{obj:.17g}"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        import json as _json

        return _json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(canonical_json(v) for v in obj) + "]"
    if isinstance(obj, dict):
        items = sorted(obj.items())
        return "{" + ", ".join(
            f"{canonical_json(str(k))}: {canonical_json(v)}" for k, v in items
        ) + "}"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _default_n() -> int:
    env = os.environ.get("RBX_DEFAULT_N")
    return int(env) if env else 100_000


def _parse_weight(text: str):
    if text == "1-q":
        return PolyQ((1, -1))
    try:
        return Fraction(text)
    except ValueError:
        raise SystemExit(2)


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(canonical_json(payload))
    else:
        print(text)


def cmd_product(args) -> int:
    a = parse_composition(args.a)
    b = parse_composition(args.b)
    if args.mode == "stuffle":
        combo = mzv.stuffle(a, b)
    elif args.mode == "shuffle":
        combo = mzv.shuffle_zeta(a, b)
    else:
        lam = _parse_weight(args.weight)
        combo = mixable_shuffle(COMPOSITION, a, b, lam)
    terms = []
    divergent = False
    for comp in sorted(combo):
        adm = is_admissible(comp)
        divergent = divergent or not adm
        entry = {"coef": str(combo[comp]), "comp": composition_str(comp)}
        if not adm:
            entry["divergent"] = True
        terms.append(entry)
    payload = {
        "mode": args.mode,
        "a": composition_str(a),
        "b": composition_str(b),
        "terms": terms,
        "divergent": divergent,
    }
    text = " + ".join(
        f"{t['coef']}*zeta({t['comp']})" for t in terms
    )
    _emit(args, payload, text)
    return 0


def cmd_relation(args) -> int:
    if args.gen == "doubleshuffle":
        rel = mzv.double_shuffle_relation(
            parse_composition(args.a), parse_composition(args.b)
        )
    elif args.gen == "hoffman":
        rel = mzv.hoffman_partition_relation(parse_composition(args.s))
    elif args.gen == "spitzer":
        rel = mzv.spitzer_zeta_relation(args.k, args.order)
    else:
        cong = mzv.congruence_zeta_relation(parse_composition(args.s), args.p)
        _emit(args, cong.to_json(), f"congruence mod {cong.p}: holds={cong.holds}")
        return 0 if cong.holds else 1
    _emit(args, rel.to_json(), relation_text(rel))
    return 0


def relation_text(rel: Relation) -> str:
    parts = []
    for m, c in rel.terms:
        mono = "*".join(f"zeta({composition_str(comp)})" for comp in m)
        parts.append(f"{c}*{mono}" if mono else str(c))
    return " + ".join(parts) + " = 0"


def cmd_eval(args) -> int:
    s = parse_composition(args.comp)
    try:
        if args.q is not None:
            cfg = EvalConfig(N=args.N, q=Fraction(args.q), K=args.K)
            res = numeric_eval.qmzv_num(s, cfg)
            payload = {
                "comp": composition_str(s),
                "q": str(cfg.q),
                "K": cfg.K,
                **res.to_json(),
            }
        else:
            cfg = EvalConfig(N=args.N, x=Fraction(args.x))
            res = numeric_eval.zeta_num(s, cfg)
            payload = {
                "comp": composition_str(s),
                "N": cfg.N,
                "x": str(cfg.x),
                **res.to_json(),
            }
    except InadmissibleError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    _emit(args, payload, f"{res.value:.17g} (tail <= {res.tail_bound:.3g})")
    return 0


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    if args.what == "spitzer":
        report = identity_engine.spitzer_check(args.order)
    elif args.what == "expstar":
        report = identity_engine.exp_star_log_check(args.order)
    elif args.what == "bohnenblust":
        report = identity_engine.bohnenblust_spitzer_check(args.n)
    elif args.what == "congruence":
        report = identity_engine.congruence_check(
            parse_composition(args.word), args.p
        )
    elif args.what == "zrb":
        ok = _verify_zrb(rng, window=args.window)
        print(f"zrb: {'ok' if ok else 'FAILED'}")
        return 0 if ok else 1
    elif args.what == "integration":
        ok = _verify_integration(rng)
        print(f"integration: {'ok' if ok else 'FAILED'}")
        return 0 if ok else 1
    else:  # jackson
        ok = _verify_jackson(rng)
        print(f"jackson: {'ok' if ok else 'FAILED'}")
        return 0 if ok else 1
    _emit(args, report.to_json(), f"{report.name}: {report.verdict}")
    return 0 if report.equal else 1


def _rand_seq(rng, n):
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]


def _verify_zrb(rng, window=50, trials=5) -> bool:
    for _ in range(trials):
        f = _rand_seq(rng, window)
        g = _rand_seq(rng, window)
        if any(ops.z_rb_defect(f, g)):
            return False
    return True


def _verify_integration(rng, trials=5) -> bool:
    for _ in range(trials):
        f = _rand_seq(rng, rng.randint(1, 7))
        g = _rand_seq(rng, rng.randint(1, 7))
        if any(ops.integration_rb_defect(f, g)):
            return False
    return True


def _rand_xpoly(rng, maxdeg=5, zero_const=False):
    coeffs = [
        RatFuncQ(PolyQ((rng.randint(-5, 5),)))
        for _ in range(rng.randint(1, maxdeg + 1))
    ]
    if zero_const and coeffs:
        coeffs[0] = RatFuncQ(PolyQ())
    return ops.XPoly(coeffs)


def _verify_jackson(rng, trials=5) -> bool:
    for _ in range(trials):
        f = _rand_xpoly(rng, zero_const=True)
        g = _rand_xpoly(rng, zero_const=True)
        if ops.rb_defect(ops.p_q, f, g, 1):
            return False
        if ops.rb_defect(ops.p_hat_q, f, g, -1):
            return False
        if ops.jackson_defect(f, g):
            return False
    return True


def _admissible_compositions(max_weight, max_depth):
    out = []

    def extend(prefix, remaining):
        if prefix:
            out.append(tuple(prefix))
        if len(prefix) >= max_depth:
            return
        lo = 2 if not prefix else 1
        for part in range(lo, remaining + 1):
            prefix.append(part)
            extend(prefix, remaining - part)
            prefix.pop()

    extend([], max_weight)
    return sorted(out)


def build_corpus(max_weight: int, max_depth: int, cfg: EvalConfig):
    """All golden-corpus entries within the bounds, verified, sorted."""
    cache: dict = {}
    entries = []

    def numeric_entry(rel: Relation, generator: str, params: str):
        residual = numeric_eval.eval_relation(rel, cfg, cache)
        entries.append({
            "weight": rel.max_weight(),
            "generator": generator,
            "params": params,
            "relation": rel.to_json(),
            "residual": residual,
            "N": cfg.N,
            "tolerance": RESIDUAL_TOL,
            "verified": residual <= RESIDUAL_TOL,
            "mode": "numeric",
        })

    comps = _admissible_compositions(max_weight, max_depth)
    for a in comps:
        for b in comps:
            if b < a:
                continue
            if comp_weight(a) + comp_weight(b) > max_weight:
                continue
            if len(a) + len(b) > max_depth:
                continue
            numeric_entry(
                mzv.double_shuffle_relation(a, b),
                "doubleshuffle",
                f"{composition_str(a)}|{composition_str(b)}",
            )
    for n in (2, 3):
        if n > max_depth:
            continue
        for s in _sorted_tuples(n, max_weight):
            numeric_entry(
                mzv.hoffman_partition_relation(s),
                "hoffman",
                ",".join(str(p) for p in s),
            )
    for k in range(2, max_weight + 1):
        for order in range(2, max_depth + 1):
            if k * order > max_weight:
                continue
            numeric_entry(
                mzv.spitzer_zeta_relation(k, order),
                "spitzer",
                f"k={k},order={order}",
            )
    for s in comps:
        for p in (2, 3):
            if p * comp_weight(s) > max_weight:
                continue
            cong = mzv.congruence_zeta_relation(s, p)
            entries.append({
                "weight": p * comp_weight(s),
                "generator": "congruence",
                "params": f"{composition_str(s)},p={p}",
                "relation": cong.to_json(),
                "residual": 0.0,
                "N": cfg.N,
                "tolerance": RESIDUAL_TOL,
                "verified": cong.holds,
                "mode": "exact-mod-p",
            })
    entries.sort(key=lambda e: (e["weight"], e["generator"], e["params"]))
    return entries


def _sorted_tuples(n, max_weight):
    """Nondecreasing n-tuples with entries >= 2 and bounded sum."""
    out = []

    def extend(prefix, lo, remaining):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for part in range(lo, remaining - 2 * (n - len(prefix) - 1) + 1):
            prefix.append(part)
            extend(prefix, part, remaining - part)
            prefix.pop()

    extend([], 2, max_weight)
    return sorted(out)


def cmd_corpus(args) -> int:
    cfg = EvalConfig(N=args.N)
    entries = build_corpus(args.max_weight, args.max_depth, cfg)
    lines = [canonical_json(e) for e in entries]
    with open(args.out, "w", encoding="utf-8") as fh:
        for line in lines:
            fh.write(line + "\n")
    bad = [e for e in entries if not e["verified"]]
    print(f"wrote {len(entries)} entries to {args.out}; "
          f"{len(bad)} failed verification")
    return 1 if bad else 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbmzv",
        description="Rota-Baxter shuffle algebras and multiple zeta values",
    )
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="stuffle/shuffle/mixable product")
    p.add_argument("--mode", choices=("stuffle", "shuffle", "mixable"),
                   default="stuffle")
    p.add_argument("--weight", default="1",
                   help="mixable-shuffle weight: 0, 1, -1 or 1-q")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("relation", help="generate a relation")
    p.add_argument("--gen", required=True,
                   choices=("doubleshuffle", "hoffman", "spitzer", "congruence"))
    p.add_argument("--a", default="2")
    p.add_argument("--b", default="2")
    p.add_argument("--s", default="2,3")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--p", type=int, default=2)
    p.set_defaults(func=cmd_relation)

    p = sub.add_parser("eval", help="numeric evaluation by truncated sums")
    p.add_argument("--comp", required=True)
    p.add_argument("--N", type=int, default=_default_n())
    p.add_argument("--x", default="0")
    p.add_argument("--q", default=None)
    p.add_argument("--K", type=int, default=400)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run an identity check")
    p.add_argument("what", choices=("spitzer", "expstar", "bohnenblust",
                                    "congruence", "jackson", "zrb",
                                    "integration"))
    p.add_argument("--order", type=int, default=5)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--word", default="2")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--window", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="build the golden relation corpus")
    csub = p.add_subparsers(dest="corpus_command", required=True)
    b = csub.add_parser("build")
    b.add_argument("--max-weight", type=int, default=6)
    b.add_argument("--max-depth", type=int, default=3)
    b.add_argument("--N", type=int, default=_default_n())
    b.add_argument("--out", required=True)
    b.set_defaults(func=cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, InadmissibleError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
