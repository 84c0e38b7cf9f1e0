"""Command-line entry point: construct / metrics / check / transform /
formula / search / verify, with machine-readable JSON reports.

Exit codes: 0 success or predicate holds, 1 check or claim failed, 2 usage or
parse error, 3 search budget exceeded.  Exact integers are serialized as
decimal strings in JSON; floats appear only in timing fields.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import constructions as cons
from . import formulas as fx
from . import metrics as mx
from . import search as sx
from . import transforms as tf
from .claims import CLAIMS, run_claim
from .families import (
    ParseError,
    SetFamily,
    Subset,
    elements_of,
    parse_family,
    serialize_family,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _jsonable(x):
    if isinstance(x, bool):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, SetFamily):
        return serialize_family(x)
    if isinstance(x, Subset):
        return " ".join(map(str, x.elements)) or "-"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _report(command: str, parameters: dict, results: dict, verdicts: dict | None = None,
            witnesses: dict | None = None, started: float | None = None) -> dict:
    rep = {
        "command": command,
        "parameters": _jsonable(parameters),
        "results": _jsonable(results),
        "verdicts": _jsonable(verdicts or {}),
        "witnesses": _jsonable(witnesses or {}),
        "timing": {"seconds": 0.0 if started is None else time.perf_counter() - started},
    }
    return rep


def _print_report(rep: dict) -> None:
    print(json.dumps(rep, indent=2, sort_keys=True))


def _read_family(path: str) -> SetFamily:
    if path == "-":
        return parse_family(sys.stdin.read())
    with open(path, "rb") as fh:
        return parse_family(fh.read())


def _write_text(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_subset(text: str) -> Subset:
    text = text.strip()
    if text in ("-", ""):
        return Subset(0)
    return Subset.from_elements(int(tok) for tok in text.split())


def _fmt_exact(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def _fmt_mask(m: int) -> str:
    return " ".join(map(str, elements_of(m))) or "-"


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def _cmd_construct(args) -> int:
    params = {}
    for name in ("n", "k", "t", "i", "r", "s", "c"):
        v = getattr(args, name)
        if v is not None:
            params[name] = v
    if args.core is not None:
        params["core"] = _parse_subset(args.core)
    if args.center is not None:
        params["center"] = _parse_subset(args.center)
    if args.graph is not None:
        params["graph"] = _read_family(args.graph)
    family = cons.build(args.name, **params)
    _write_text(serialize_family(family), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# metrics
# ---------------------------------------------------------------------------

def _cmd_metrics(args) -> int:
    started = time.perf_counter()
    family = _read_family(args.family)
    rep = mx.metric_report(family)
    results = {
        "n": rep.n,
        "members": rep.member_count,
        "beta": rep.beta,
        "gamma": rep.gamma,
        "delta": rep.delta,
        "degrees": list(rep.degrees),
        "uniform": rep.uniform,
        "uniform_k": rep.uniform_k,
    }
    if args.matrix:
        results["link_matrix"] = [list(row) for row in mx.link_matrix(family).rows]
    if args.json:
        _print_report(_report("metrics", {"file": args.family}, results, started=started))
    else:
        for key in ("n", "members", "beta", "gamma", "delta"):
            print(f"{key} = {results[key]}")
        print(f"degrees = {' '.join(map(str, rep.degrees))}")
        print(f"uniform = {'yes (k=%d)' % rep.uniform_k if rep.uniform_k is not None else 'no' if not rep.uniform else 'yes (empty)'}")
        if args.matrix:
            for row in results["link_matrix"]:
                print(" ".join(map(str, row)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def _cmd_check(args) -> int:
    family = _read_family(args.family)
    pred = args.predicate
    holds: bool
    witness = ""
    if pred == "intersecting":
        bad = mx.t_intersecting_witness(family, 1)
        holds = bad is None
        if bad:
            witness = " | ".join(_fmt_mask(m) for m in bad)
    elif pred == "t-intersecting":
        if args.t is None:
            raise ValueError("t-intersecting needs --t")
        bad = mx.t_intersecting_witness(family, args.t)
        holds = bad is None
        if bad:
            witness = " | ".join(_fmt_mask(m) for m in bad)
    elif pred == "r-wise":
        if args.t is None or args.r is None:
            raise ValueError("r-wise needs --r and --t")
        bad = mx.r_wise_witness(family, args.r, args.t)
        holds = bad is None
        if bad:
            witness = " | ".join(_fmt_mask(m) for m in bad)
    elif pred == "u-union":
        if args.u is None:
            raise ValueError("u-union needs --u")
        holds = mx.is_u_union(family, args.u)
        if not holds:
            pair = max(
                ((a, b) for a in family.masks for b in family.masks),
                key=lambda ab: (ab[0] | ab[1]).bit_count(),
            )
            witness = " | ".join(_fmt_mask(m) for m in pair)
    elif pred == "diameter":
        if args.w is None:
            raise ValueError("diameter needs --w")
        holds = bool(family.masks) and mx.diameter(family) <= args.w
        if family.masks and not holds:
            pair = max(
                ((a, b) for a in family.masks for b in family.masks),
                key=lambda ab: (ab[0] ^ ab[1]).bit_count(),
            )
            witness = " | ".join(_fmt_mask(m) for m in pair)
    elif pred == "shifted":
        bad3 = mx.shifted_witness(family)
        holds = bad3 is None
        if bad3:
            i, j, m = bad3
            witness = f"member {_fmt_mask(m)} lacks its {j}->{i} swap"
    elif pred == "hamming-ball":
        found = mx.is_hamming_ball(family)
        holds = found is not None
        if holds:
            center, radius = found
            witness = f"center {_fmt_mask(center.mask)} radius {radius}"
    elif pred == "iu":
        holds = mx.is_iu(family)
        if not holds:
            bad = mx.t_intersecting_witness(family, 1)
            if bad is None:
                from .families import complement_family

                bad = mx.t_intersecting_witness(complement_family(family), 1)
                witness = "complements: " + " | ".join(_fmt_mask(m) for m in bad)
            else:
                witness = " | ".join(_fmt_mask(m) for m in bad)
    elif pred == "split":
        if args.x is None:
            raise ValueError("split needs --x")
        window = _parse_subset(args.x)
        holds = mx.split_check(family, window)
        if not holds:
            bad2 = mx.split_witness(family, window)
            if bad2:
                witness = " | ".join(_fmt_mask(m) for m in bad2)
    else:
        raise ValueError(f"unknown predicate {pred!r}")
    if holds:
        print(f"{pred}: holds")
        return EXIT_OK
    print(f"{pred}: fails" + (f"  witness: {witness}" if witness else ""))
    return EXIT_FAILED


# ---------------------------------------------------------------------------
# transform
# ---------------------------------------------------------------------------

def _cmd_transform(args) -> int:
    family = _read_family(args.family)
    op = args.operation
    if op == "shift":
        if (args.i is None) != (args.j is None):
            raise ValueError("shift takes both --i and --j, or neither")
        out = tf.shift_once(family, args.i, args.j) if args.i is not None else tf.shift_closure(family)
    elif op == "saturate":
        if args.t is None:
            raise ValueError("saturate needs --t")
        out = tf.saturate(family, args.t)
    elif op == "basis":
        if args.t is None:
            raise ValueError("basis needs --t")
        out = tf.basis(family, args.t).to_family()
    elif op == "generated":
        if args.n is None or args.k is None:
            raise ValueError("generated needs --n and --k")
        out = tf.generated(family, args.n, args.k)
    else:
        raise ValueError(f"unknown transform {op!r}")
    _write_text(serialize_family(out), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# formula
# ---------------------------------------------------------------------------

def _formula_registry():
    return {
        "binom": (lambda a: fx.binom(a[0], a[1]), ("a", "b")),
        "triangle-beta-cases": (lambda a: fx.triangle_beta_cases(a[0], a[1]), ("n", "k")),
        "frankl-beta": (lambda a: fx.frankl_beta(a[0], a[1], a[2], a[3]), ("n", "k", "t", "i")),
        "frankl-beta-ratio": (lambda a: fx.frankl_beta_ratio(a[0], a[1], a[2]), ("n", "k", "t")),
        "f0-links": (lambda a: fx.f0_link_formulas(a[0], a[1], fx.g0_stats(cons.g0())), ("n", "k")),
        "f0-links-printed": (lambda a: fx.f0_link_formulas_printed(a[0], a[1]), ("n", "k")),
        "ekr-size": (lambda a: fx.ekr_size_bound(a[0], a[1], a[2]), ("n", "k", "t")),
        "katona-size": (lambda a: fx.katona_size_bound(a[0], a[1]), ("n", "t")),
        "katona-size-printed": (lambda a: fx.katona_size_bound_printed(a[0], a[1]), ("n", "t")),
        "uniform-intersecting-beta": (lambda a: fx.uniform_intersecting_beta_bound(a[0], a[1]), ("n", "k")),
        "uniform-t-intersecting-beta": (lambda a: fx.uniform_t_intersecting_beta_bound(a[0], a[1], a[2]), ("n", "k", "t")),
        "any-intersecting-beta": (lambda a: fx.any_intersecting_beta_bound(a[0]), ("n",)),
        "any-t-intersecting-beta": (lambda a: fx.any_t_intersecting_beta_bound(a[0], a[1]), ("n", "t")),
        "shifted-rwise-beta": (lambda a: fx.shifted_r_wise_beta_bound(a[0], a[1], a[2], a[3]), ("n", "k", "t", "r")),
        "rwise-beta": (lambda a: fx.r_wise_beta_bound(a[0], a[1], a[2], a[3]), ("n", "k", "t", "r")),
        "beta-vs-diversity": (lambda a: fx.beta_vs_diversity_bound(a[0], a[1], a[2]), ("n", "k", "gamma")),
        "beta-vs-size": (lambda a: fx.beta_vs_size_bound(a[0], a[1]), ("n", "size")),
        "beta-vs-size-odd": (lambda a: fx.beta_vs_size_bound_odd(a[0], a[1]), ("n", "size")),
        "cross-degree-product": (lambda a: fx.cross_degree_product_bound(a[0], a[1]), ("n", "k")),
        "cross-distance-size": (lambda a: fx.cross_distance_size_bound(a[0], a[1]), ("n", "w")),
        "diameter-beta": (lambda a: fx.diameter_beta_bound(a[0], a[1]), ("n", "w")),
        "union-beta": (lambda a: fx.union_beta_bound(a[0], a[1]), ("n", "u")),
        "cross-intersecting-size": (lambda a: fx.cross_intersecting_size_bound(a[0], a[1], a[2]), ("n", "k", "t")),
        "t-intersecting-size": (lambda a: fx.t_intersecting_size_bound(a[0], a[1], a[2]), ("n", "k", "t")),
        "hilton-milner-size": (lambda a: fx.hilton_milner_size_bound(a[0], a[1]), ("n", "k")),
        "intersecting-gamma": (lambda a: fx.intersecting_gamma_bound(a[0], a[1]), ("n", "k")),
        "conjectured-union-beta": (lambda a: fx.conjectured_union_beta(a[0], a[1]), ("n", "s")),
        "conjectured-diameter-beta": (lambda a: fx.conjectured_diameter_beta(a[0], a[1]), ("n", "s")),
        "conjectured-iu-beta": (lambda a: fx.conjectured_iu_beta(a[0]), ("n",)),
        "hamming-ball-beta": (lambda a: fx.hamming_ball_beta(a[0], a[1]), ("n", "s")),
        "diameter-example-beta": (lambda a: fx.diameter_example_beta(a[0], a[1]), ("n", "s")),
        "example511-beta": (lambda a: fx.example_511_beta(a[0], a[1], a[2]), ("n", "s", "beta_g")),
        "example511-size": (lambda a: fx.example_511_size_bound(a[0], a[1]), ("n", "s")),
        "density-limit": (lambda a: fx.density_limit(Fraction(a[0]), int(a[1]), int(a[2])), ("alpha", "t", "ell")),
    }


def _cmd_formula(args) -> int:
    started = time.perf_counter()
    registry = _formula_registry()
    if args.list:
        for name, (_, params) in sorted(registry.items()):
            print(f"{name} {' '.join(params)}")
        return EXIT_OK
    if args.name not in registry:
        raise ValueError(f"unknown formula {args.name!r}; try --list")
    fn, params = registry[args.name]
    if len(args.params) != len(params):
        raise ValueError(f"{args.name} takes {len(params)} parameters: {' '.join(params)}")
    raw = [p if args.name == "density-limit" else int(p) for p in args.params]
    value = fn(raw)
    results: dict = {}
    if isinstance(value, fx.BoundValue):
        results = {"value": value.value, "applicable": value.applicable,
                   "hypothesis": value.hypothesis}
    elif isinstance(value, fx.TriangleLinkCases):
        results = {"outer_outer": value.outer_outer, "inner_outer": value.inner_outer,
                   "outer_inner": value.outer_inner, "inner_inner": value.inner_inner,
                   "minimum": value.minimum}
    elif isinstance(value, fx.FranklRatio):
        results = {"exact": value.exact, "asymptotic": value.asymptotic, "c": value.c}
    elif isinstance(value, fx.F0LinkValues):
        results = {"both_outside": value.both_outside, "i_inside": value.i_inside,
                   "j_inside": value.j_inside, "both_inside": value.both_inside}
    else:
        results = {"value": value}
    if args.json:
        _print_report(_report("formula", {"name": args.name, "params": list(args.params)},
                              results, started=started))
    else:
        for k, v in results.items():
            print(f"{k} = {_fmt_exact(v)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def _constraint_from_args(args) -> sx.ConstraintSpec:
    kind = args.constraint
    if kind == "t_intersecting_uniform":
        if args.k is None or args.t is None:
            raise ValueError("t_intersecting_uniform needs --k and --t")
        return sx.ConstraintSpec.t_intersecting_uniform(args.n, args.k, args.t)
    if kind == "t_intersecting_any":
        if args.t is None:
            raise ValueError("t_intersecting_any needs --t")
        return sx.ConstraintSpec.t_intersecting_any(args.n, args.t)
    if kind == "u_union":
        if args.u is None:
            raise ValueError("u_union needs --u")
        return sx.ConstraintSpec.u_union(args.n, args.u)
    if kind == "diameter":
        if args.w is None:
            raise ValueError("diameter needs --w")
        return sx.ConstraintSpec.diameter(args.n, args.w)
    if kind == "iu":
        return sx.ConstraintSpec.iu(args.n)
    raise ValueError(f"unknown constraint {kind!r}")


def _default_budget(args) -> sx.Budget:
    nodes = args.budget_nodes
    if nodes is None:
        env = os.environ.get("STURDY_BUDGET_NODES")
        nodes = int(env) if env else None
    return sx.Budget(max_nodes=nodes, max_seconds=args.budget_secs)


def _cmd_search(args) -> int:
    started = time.perf_counter()
    if args.mode in ("max-beta", "max-size"):
        spec = _constraint_from_args(args)
        objective = "beta" if args.mode == "max-beta" else "size"
        res = sx.extremal_search(spec, objective, _default_budget(args), args.workers)
        results = {
            "constraint": spec.describe(),
            "objective": objective,
            "value": res.value,
            "families_enumerated": res.families_enumerated,
            "nodes": res.nodes,
            "exhausted": res.exhausted,
        }
        params = {k: getattr(args, k) for k in
                  ("constraint", "n", "k", "t", "u", "w", "budget_nodes",
                   "budget_secs", "workers") if getattr(args, k) is not None}
        if args.json:
            _print_report(_report(f"search {args.mode}", params,
                                  results, witnesses={"witness": res.witness},
                                  started=started))
        else:
            for k, v in results.items():
                print(f"{k} = {v}")
            print("witness:")
            sys.stdout.write(serialize_family(res.witness))
        return EXIT_OK if res.exhausted else EXIT_BUDGET
    if args.mode == "probe":
        rep = sx.probe_conjecture(args.conjecture, args.n, s=args.s,
                                  budget=_default_budget(args), workers=args.workers)
        results = {
            "conjecture": rep.conjecture,
            "constraint": rep.constraint.describe(),
            "max_beta": rep.result.value,
            "rhs": rep.rhs,
            "within_bound": rep.within_bound,
            "hypothesis_met": rep.hypothesis_met,
            "families_enumerated": rep.result.families_enumerated,
            "exhausted": rep.result.exhausted,
        }
        if args.json:
            _print_report(_report("search probe", {"conjecture": args.conjecture,
                                                   "n": args.n, "s": args.s},
                                  results, witnesses={"witness": rep.result.witness},
                                  started=started))
        else:
            for k, v in results.items():
                print(f"{k} = {_fmt_exact(v) if isinstance(v, (int, Fraction)) else v}")
            print("witness:")
            sys.stdout.write(serialize_family(rep.result.witness))
        return EXIT_OK if rep.result.exhausted else EXIT_BUDGET
    raise ValueError(f"unknown search mode {args.mode!r}")


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    started = time.perf_counter()
    if args.list:
        for cid, claim in CLAIMS.items():
            print(f"{cid:18} {claim.summary}  [{claim.anchor}]")
        return EXIT_OK
    ids = list(CLAIMS) if args.all or not args.ids else args.ids
    unknown = [cid for cid in ids if cid not in CLAIMS]
    if unknown:
        print(f"unknown claim ids: {', '.join(unknown)}", file=sys.stderr)
        return EXIT_USAGE
    outcomes = []
    for cid in ids:
        res = run_claim(cid, seed=args.seed, workers=args.workers)
        outcomes.append(res)
        status = "PASS" if res.passed else "FAIL"
        line = f"{status} {cid}"
        for note in res.notes:
            line += f"  ({note})"
        print(line)
    all_pass = all(r.passed for r in outcomes)
    if args.json:
        _print_report(_report(
            "verify", {"ids": ids, "seed": args.seed},
            {r.cid: r.details for r in outcomes},
            verdicts={r.cid: r.passed for r in outcomes},
            started=started,
        ))
    return EXIT_OK if all_pass else EXIT_FAILED


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sturdy",
        description="Exact computations with intersecting set families.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("construct", help="build a named family as .fam text")
    p.add_argument("name", choices=sorted(cons.BUILDERS))
    for flag in ("n", "k", "t", "i", "r", "s", "c"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--core", help="three elements, e.g. '1 2 5'")
    p.add_argument("--center", help="ball center, e.g. '1 3' or '-'")
    p.add_argument("--graph", help=".fam file with the uniform intersecting graph")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("metrics", help="sturdiness, diversity, degrees of a family")
    p.add_argument("family", help=".fam file or - for stdin")
    p.add_argument("--matrix", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("check", help="test a predicate; exit 0 iff it holds")
    p.add_argument("predicate", choices=[
        "intersecting", "t-intersecting", "r-wise", "u-union", "diameter",
        "shifted", "hamming-ball", "iu", "split",
    ])
    p.add_argument("family", help=".fam file or - for stdin")
    for flag in ("t", "r", "u", "w"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--x", help="window for split, e.g. '1 2 3'")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("transform", help="shift / saturate / basis / generated")
    p.add_argument("operation", choices=["shift", "saturate", "basis", "generated"])
    p.add_argument("family", help=".fam file or - for stdin")
    for flag in ("t", "n", "k", "i", "j"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("formula", help="evaluate an exact formula or bound")
    p.add_argument("name", nargs="?", default="")
    p.add_argument("params", nargs="*")
    p.add_argument("--list", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("search", help="exhaustive extremal search")
    p.add_argument("mode", choices=["max-beta", "max-size", "probe"])
    p.add_argument("--constraint", choices=[
        "t_intersecting_uniform", "t_intersecting_any", "u_union", "diameter", "iu",
    ])
    p.add_argument("--conjecture", choices=["c61", "c62", "c63"])
    p.add_argument("--n", type=int, required=True)
    for flag in ("k", "t", "u", "w", "s"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-secs", type=float, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="run registered verification claims")
    p.add_argument("ids", nargs="*")
    p.add_argument("--all", action="store_true")
    p.add_argument("--list", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, ValueError, KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
