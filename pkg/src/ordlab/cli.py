"""Command-line front end: ``ordlab <subcommand> ...``.

Exit codes: 0 success, 1 a checked property was violated, 2 usage or
input error.  Every JSON artifact records the seed; no artifact depends
on ``--threads``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import replace
from pathlib import Path

from .arith import Dyadic, rat, rat_str
from .fixtures import FIXTURES
from .group import GroupElement
from .orders import (
    ORDERS,
    audit_action_preserves_order,
    audit_extension_lemma,
    audit_left_invariance,
    audit_order_axioms,
    get_order,
)
from .pl import PLHomeo
from .realization import ResourceError as BallCapError
from .realization import (
    RealizationState,
    assign_coordinates,
    enumerate_ball,
    fixed_point_survey,
)
from .search import ResourceError as WordCapError
from .search import (
    SearchParams,
    check_growth,
    count_Sn,
    count_Sn_prime,
    growth_threshold,
    pigeonhole_search,
    validate_params,
)
from .semiarch import PNInstance, check_PN_horizon
from .semiarch import ResourceError as HorizonCapError
from .semigroup import (
    CrossedPairWitness,
    construct_crossed,
    positive_word_distinctness,
    verify_witness,
)

ORBIT_CSV_VERSION = "v1"
ORBIT_COLUMNS = ["index", "t", "s", "d", "coord"]


class UsageError(Exception):
    pass


# --- io helpers -------------------------------------------------------------


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path}: {exc}") from None


def _load_map(path: str | None, fallback: PLHomeo | None) -> PLHomeo:
    if path is None:
        if fallback is None:
            raise UsageError("missing map file")
        return fallback
    return PLHomeo.from_json(_load_json(path))


# --- orbit csv ------------------------------------------------------------------


def write_orbit_csv(state: RealizationState, ball: int, seed: int) -> str:
    buf = io.StringIO()
    buf.write(
        f"# ordlab orbit {ORBIT_CSV_VERSION}; group=gamma; ball={ball}; "
        f"order={state.order}; seed={seed}\n"
    )
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ORBIT_COLUMNS)
    for i, g in enumerate(state.elements):
        w.writerow([i, g.t, g.s, str(g.d), rat_str(state.coord[g])])
    return buf.getvalue()


def read_orbit_csv(text: str) -> tuple[dict, RealizationState]:
    lines = text.splitlines()
    if not lines or not lines[0].startswith(f"# ordlab orbit {ORBIT_CSV_VERSION};"):
        raise UsageError("not an ordlab orbit file (bad header)")
    meta = {}
    for part in lines[0].split(";")[1:]:
        key, _, val = part.strip().partition("=")
        meta[key] = val
    rows = list(csv.reader(lines[1:]))
    if not rows or rows[0] != ORBIT_COLUMNS:
        raise UsageError(f"orbit columns must be {ORBIT_COLUMNS}")
    elements, coord = [], {}
    for row in rows[1:]:
        g = GroupElement(int(row[1]), int(row[2]), Dyadic.parse(row[3]))
        elements.append(g)
        coord[g] = rat(row[4])
    order = meta.get("order", "extension")
    ranked = sorted(elements, key=lambda g: coord[g])
    state = RealizationState(elements, coord, order, ranked, [coord[g] for g in ranked])
    return meta, state


# --- subcommands ------------------------------------------------------------------


def cmd_realize(args) -> int:
    if args.group != "gamma":
        raise UsageError("only --group gamma is available")
    if args.order not in ("extension", "extension-s"):
        raise UsageError("--order must be extension or extension-s")
    state = assign_coordinates(enumerate_ball(args.ball), order=args.order)
    _emit(write_orbit_csv(state, args.ball, args.seed), args.out)
    return 0


def cmd_survey(args) -> int:
    if not args.input:
        raise UsageError("survey needs --in (flag or config key 'input')")
    try:
        text = Path(args.input).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(str(exc)) from None
    meta, state = read_orbit_csv(text)
    elements = None
    if args.radius is not None:
        present = set(state.elements)
        elements = [g for g in enumerate_ball(args.radius) if g in present]
    try:
        report = fixed_point_survey(state, elements, workers=args.threads)
    except AssertionError as exc:
        _emit(_dump_json({"seed": args.seed, "error": str(exc)}), args.out)
        return 1
    out = {
        "seed": args.seed,
        "orbit": {"ball": meta.get("ball"), "order": state.order, "points": len(state.elements)},
        "survey_radius": args.radius,
        "max_allowed": args.max_fixed,
        **report,
    }
    _emit(_dump_json(out), args.out)
    too_many = report["max_isolated"] is not None and report["max_isolated"] > args.max_fixed
    return 1 if report["fixed_intervals"] or too_many else 0


def cmd_orders(args) -> int:
    spec = get_order(args.order)
    report = audit_left_invariance(spec, args.samples, args.seed, right=spec.bi_order)
    axioms = audit_order_axioms(spec, args.samples, args.seed)["failures"]
    report["axiom_failures"] = axioms
    bad = report["violation_count"] + sum(axioms.values())
    if spec.name in ("extension", "extension-s"):
        dominant = "s" if spec.name.endswith("-s") else "t"
        lemma = audit_extension_lemma(args.samples, args.seed, dominant)
        action = audit_action_preserves_order(args.samples, args.seed)
        report["extension_lemma_violations"] = lemma["violations"]
        report["action_preserves_order_violations"] = action
        bad += sum(lemma["violations"].values()) + action
    _emit(_dump_json(report), args.out)
    return 1 if bad else 0


def cmd_semigroup(args) -> int:
    base = FIXTURES[args.fixture]() if args.fixture else (None, None)
    f = _load_map(args.f, base[0])
    g = _load_map(args.g, base[1])
    built = construct_crossed(f, g, cap=args.cap)
    out = {"seed": args.seed, "max_len": args.max_len}
    if isinstance(built, CrossedPairWitness):
        ok = verify_witness(built)
        pair = built.pair
        out["witness"] = {**built.to_json(), "verified": ok}
        dist = positive_word_distinctness(pair[0], pair[1], args.max_len)
    else:
        ok = True
        out["witness"] = None
        out["construction"] = built.to_json()
        dist = positive_word_distinctness(f, g, args.max_len)
    out["words_of"] = "witness pair" if out["witness"] else "input pair"
    out["distinct_up_to"] = dist["distinct_up_to"]
    out["words_checked"] = dist["words_checked"]
    out["counterexample"] = dist["counterexample"]
    _emit(_dump_json(out), args.out)
    # a crossed pair whose positive words collide would contradict freeness
    return 0 if ok and (out["witness"] is None or dist["distinct"]) else 1


def cmd_search(args) -> int:
    fx = FIXTURES[args.fixture]()
    alpha = _load_map(args.alpha, fx[0])
    beta = _load_map(args.beta, fx[1])
    W = _load_map(args.W, PLHomeo.identity())
    params = SearchParams.from_json(_load_json(args.params)) if args.params else SearchParams()
    n = params.n if args.n is None else args.n
    grid = params.grid_N if args.grid is None else args.grid
    params = replace(params, n=n, grid_N=grid)
    result = pigeonhole_search(alpha, beta, W, n=n, grid_N=grid, mode=args.mode)
    out = {
        "seed": args.seed,
        "mode": args.mode,
        "params": params.to_json(),
        "validation": validate_params(params, alpha, beta),
        "result": result.to_json(),
    }
    _emit(_dump_json(out), args.out)
    return 0


def cmd_count(args) -> int:
    rows = []
    for n in range(args.max_n + 1):
        rows.append((n, count_Sn(n), count_Sn_prime(n), check_growth(n)))
    n0 = growth_threshold(max(args.max_n, 200))
    if args.json:
        text = _dump_json(
            {
                "seed": args.seed,
                "rows": [
                    {"n": n, "S_n": s, "S_n_prime": sp, "S_n_prime_ge_1.9^n": ok}
                    for n, s, sp, ok in rows
                ],
                "growth_threshold": n0,
                "threshold_scan_max_n": max(args.max_n, 200),
            }
        )
    else:
        lines = [f"# seed={args.seed}", "n\t|S_n|\t|S'_n|\t|S'_n|>=1.9^n"]
        lines += [f"{n}\t{s}\t{sp}\t{'holds' if ok else 'fails'}" for n, s, sp, ok in rows]
        lines.append(f"# growth threshold n0 = {n0} (scan up to {max(args.max_n, 200)})")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_pn_check(args) -> int:
    if not args.instance:
        raise UsageError("pn-check needs --instance")
    obj = _load_json(args.instance)
    if args.horizon is not None:
        obj["horizon"] = args.horizon
    try:
        inst = PNInstance.from_json(obj)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad instance: {exc}") from None
    verdict = check_PN_horizon(inst)
    out = {"seed": args.seed, "instance": inst.to_json(), "verdict": verdict.to_json()}
    _emit(_dump_json(out), args.out)
    return 0


# --- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file of option defaults for this subcommand")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--out", help="output path (default stdout)")

    p = argparse.ArgumentParser(prog="ordlab", description="Exact computations with ordered groups.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("realize", parents=[common], help="orbit coordinates of a ball in Gamma")
    r.add_argument("--group", default="gamma")
    r.add_argument("--ball", type=int, default=6)
    r.add_argument("--order", default="extension")
    r.set_defaults(func=cmd_realize)

    s = sub.add_parser("survey", parents=[common], help="fixed-point census of realized maps")
    s.add_argument("--in", dest="input")
    s.add_argument("--radius", type=int, default=None, help="survey only elements of this ball")
    s.add_argument("--max-fixed", type=int, default=2)
    s.set_defaults(func=cmd_survey)

    o = sub.add_parser("orders", help="order audits")
    osub = o.add_subparsers(dest="orders_command", required=True)
    oa = osub.add_parser("audit", parents=[common])
    oa.add_argument("--order", choices=sorted(ORDERS), default="extension")
    oa.add_argument("--samples", type=int, default=10000)
    oa.set_defaults(func=cmd_orders)

    g = sub.add_parser("semigroup", parents=[common], help="crossed pairs and word distinctness")
    g.add_argument("--f")
    g.add_argument("--g")
    g.add_argument("--fixture", choices=sorted(FIXTURES))
    g.add_argument("--max-len", type=int, default=12)
    g.add_argument("--cap", type=int, default=64)
    g.set_defaults(func=cmd_semigroup)

    q = sub.add_parser("search", parents=[common], help="pigeonhole search over S'_n")
    q.add_argument("--alpha")
    q.add_argument("--beta")
    q.add_argument("--W")
    q.add_argument("--fixture", choices=sorted(FIXTURES), default="contracting")
    q.add_argument("--n", type=int, default=None)
    q.add_argument("--grid", type=int, default=None)
    q.add_argument("--params")
    q.add_argument("--mode", choices=["best", "closest", "first"], default="best")
    q.set_defaults(func=cmd_search)

    c = sub.add_parser("count", parents=[common], help="word-set sizes and the growth check")
    c.add_argument("--max-n", type=int, default=40)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_count)

    k = sub.add_parser("pn-check", parents=[common], help="finite-horizon (P_N) instance check")
    k.add_argument("--instance")
    k.add_argument("--horizon", type=int, default=None)
    k.set_defaults(func=cmd_pn_check)
    return p


def _subparser(parser: argparse.ArgumentParser, args) -> argparse.ArgumentParser:
    actions = [a for a in parser._actions if isinstance(a, argparse._SubParsersAction)]
    sp = actions[0].choices[args.command]
    if args.command == "orders":
        inner = [a for a in sp._actions if isinstance(a, argparse._SubParsersAction)]
        sp = inner[0].choices[args.orders_command]
    return sp


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(argv)
    try:
        if args.config:
            cfg = _load_json(args.config)
            if not isinstance(cfg, dict):
                raise UsageError("config must be a JSON object")
            cfg = cfg.get(args.command, cfg)
            sp = _subparser(parser, args)
            known = {a.dest for a in sp._actions}
            defaults = {}
            for key, val in cfg.items():
                dest = key.replace("-", "_")
                if dest not in known:
                    raise UsageError(f"unknown config key {key!r}")
                defaults[dest] = val
            sp.set_defaults(**defaults)
            args = parser.parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be positive")
        return args.func(args)
    except UsageError as exc:
        print(f"ordlab: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, BallCapError, WordCapError, HorizonCapError) as exc:
        print(f"ordlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
