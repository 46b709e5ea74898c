"""Command-line entry point.

Every subcommand prints a deterministic report (human tables by default,
a JSON run report with --json) on stdout; wall time goes to stderr so
stdout is byte-identical across runs.  Exit codes: 0 pass, 1 verification
failure or mathematical finding, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Dict, Tuple

from macq import __version__
from macq.algebra import (MPoly, check_q_chu_vandermonde, check_q_dual_chu,
                          check_q_telescope, check_qbinom_theorem, mpoly_to_json,
                          qmultinom)
from macq import llt as lltmod
from macq import superfill as sf
from macq import symfunc
from macq import tableaux as tb
from macq import tazrp as tz
from macq import words as wd

DEFAULT_BUDGET = 10 ** 8


class UsageError(Exception):
    pass


def parse_partition(s: str) -> Tuple[int, ...]:
    try:
        lam = tuple(int(v) for v in s.split(","))
    except ValueError:
        raise UsageError(f"malformed partition {s!r}")
    if not symfunc.is_partition(lam):
        raise UsageError(f"not a partition: {s!r}")
    return lam


def parse_fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed rational {s!r}")


def parse_row_class(s: str) -> tb.RowClass:
    try:
        return tuple(tuple(sorted(int(v) for v in row.split(",")))
                     for row in s.split(";"))
    except ValueError:
        raise UsageError(f"malformed row class {s!r}")


def _guard(states: int, budget: int) -> None:
    if states > budget:
        raise UsageError(
            f"enumeration of {states} states exceeds the budget {budget}; "
            f"rerun with --max-states to override")


def _poly_artifact(p: MPoly) -> dict:
    return {"nvars": p.nvars, "text": str(p), "terms": mpoly_to_json(p)}


def _compute_poly(lam, n, stat, threads) -> MPoly:
    statf = tb.quinv if stat == "quinv" else tb.hhl_inv
    if threads <= 1 or not lam:
        return tb.filling_sum(lam, n, statf)
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda v: tb.filling_sum(lam, n, statf, prefix=(v,)),
                         range(1, n + 1))
        total = MPoly.zero(n)
        for p in parts:  # merged in fixed order; addition is associative
            total = total + p
    return total


# ---------------------------------------------------------------- commands

def cmd_compute(args) -> Tuple[int, dict]:
    lam = parse_partition(args.lam)
    _guard(args.n ** sum(lam), args.max_states)
    p = _compute_poly(lam, args.n, args.stat, args.threads)
    return 0, {"polynomial": _poly_artifact(p)}


def cmd_compare(args) -> Tuple[int, dict]:
    lam = parse_partition(args.lam)
    _guard(2 * args.n ** sum(lam), args.max_states)
    pq = _compute_poly(lam, args.n, "quinv", args.threads)
    ph = _compute_poly(lam, args.n, "hhl", args.threads)
    if pq == ph:
        return 0, {"equal": True, "polynomial": _poly_artifact(pq)}
    return 1, {"equal": False, "quinv": _poly_artifact(pq),
               "hhl": _poly_artifact(ph),
               "difference": _poly_artifact(pq - ph)}


def cmd_class_gf(args) -> Tuple[int, dict]:
    lam = parse_partition(args.lam)
    rc = parse_row_class(args.cls)
    try:
        gq = tb.class_gf(lam, args.n, rc, "quinv")
        gh = tb.class_gf(lam, args.n, rc, "hhl")
    except ValueError as e:
        raise UsageError(str(e))
    art = {"quinv_gf": _poly_artifact(gq), "hhl_gf": _poly_artifact(gh),
           "equal": gq == gh}
    return (0 if gq == gh else 1), art


def cmd_verify_axioms(args) -> Tuple[int, dict]:
    lam = parse_partition(args.lam)
    bound = args.bound if args.bound else sum(lam)
    _guard((2 * bound) ** sum(lam), args.max_states)
    checks: Dict[str, bool] = {}
    poly = tb.macdonald_quinv(lam, args.n)
    checks["symmetric"] = symfunc.is_symmetric(poly)
    lead = poly.x_slice((sum(lam),) + (0,) * (args.n - 1))
    checks["leading_x_coefficient_is_1"] = lead == MPoly.const(1)
    c1 = symfunc.monomial_expand(sf.sum_C1(lam, bound))
    c2 = symfunc.monomial_expand(sf.sum_C2(lam, bound))
    checks["first_axiom_triangular"] = symfunc.triangularity_check(
        c1, lam, "lambda")
    checks["second_axiom_triangular"] = symfunc.triangularity_check(
        c2, lam, "conjugate")
    ok = all(checks.values())
    return (0 if ok else 1), {"checks": checks}


def _verify_psi(lam, bound) -> Dict[str, bool]:
    involutive = fixed_ok = maj_ok = quinv_ok = True
    for s in sf.enumerate_super_fillings(lam, bound):
        img = sf.psi(s)
        involutive &= sf.psi(img) == s
        if img == s:
            fixed_ok &= sf.is_non_attacking(s)
        else:
            fixed_ok &= not sf.is_non_attacking(s)
            maj_ok &= sf.super_maj(img, sf.O1) == sf.super_maj(s, sf.O1)
            flipped = next(v for a, b in zip(s.cols, img.cols)
                           for v, w in zip(a, b) if v != w)
            delta = sf.super_quinv(img, sf.O1) - sf.super_quinv(s, sf.O1)
            quinv_ok &= delta == (1 if flipped > 0 else -1)
    return {"psi_involutive": involutive, "psi_fixed_points_non_attacking":
            fixed_ok, "psi_preserves_maj": maj_ok,
            "psi_shifts_quinv_by_sign": quinv_ok}


def _verify_tau(lam, bound) -> Dict[str, bool]:
    involutive = maj_ok = quinv_ok = True
    cols_eq = [j for j in range(1, len(lam)) if lam[j - 1] == lam[j]]
    for s in sf.enumerate_super_fillings(lam, bound):
        for j in cols_eq:
            img = sf.tau(s, j)
            involutive &= sf.tau(img, j) == s
            maj_ok &= sf.super_maj(img, sf.O2) == sf.super_maj(s, sf.O2)
            k = lam[j - 1]
            x, y = s.entry(k, j), s.entry(k, j + 1)
            expect = 0 if x == y else (1 if sf.I(x, y, sf.O2) else -1)
            quinv_ok &= (sf.super_quinv(img, sf.O2)
                         - sf.super_quinv(s, sf.O2)) == expect
    return {"tau_involutive": involutive, "tau_preserves_maj": maj_ok,
            "tau_shifts_quinv_by_top_pair": quinv_ok}


def _verify_theta(lam, bound) -> Dict[str, bool]:
    gt, leq = [], []
    for s in sf.enumerate_super_fillings(lam, bound):
        if sf.classify(s).kind == "degenerate":
            (gt if sf.segment_side(s) == "gt" else leq).append(s)
    bijective = contracts = True
    images = set()
    for s in gt:
        img = sf.theta(s)
        images.add(img)
        contracts &= sf.segment_side(img) == "leq"
        contracts &= sf.super_maj(img, sf.O2) == sf.super_maj(s, sf.O2) + 1
        contracts &= sf.super_quinv(img, sf.O2) == sf.super_quinv(s, sf.O2)
        contracts &= img.positives() == s.positives() - 1
        contracts &= sf.abs_filling(img).content() == sf.abs_filling(s).content()
        bijective &= sf.theta_inverse(img) == s
    bijective &= len(images) == len(gt) == len(leq)
    return {"theta_bijective": bijective, "theta_contracts": contracts}


def _verify_c1(lam, bound) -> Dict[str, bool]:
    full = sf.sum_C1(lam, bound)
    fixed = sf.sum_C1(lam, bound, restrict=sf.is_non_attacking)
    tri = symfunc.triangularity_check(symfunc.monomial_expand(full),
                                      lam, "lambda")
    return {"first_sum_fixed_points_only": full == fixed,
            "first_sum_triangular": tri}


def _verify_c2(lam, bound) -> Dict[str, bool]:
    full = sf.sum_C2(lam, bound)
    trivial = sf.sum_C2(lam, bound,
                        restrict=lambda s: sf.classify(s).kind == "trivial")
    nondeg = sf.sum_C2(lam, bound,
                       restrict=lambda s: sf.classify(s).kind == "nondegenerate")
    deg = sf.sum_C2(lam, bound,
                    restrict=lambda s: sf.classify(s).kind == "degenerate")
    tri = symfunc.triangularity_check(symfunc.monomial_expand(full),
                                      lam, "conjugate")
    zero = MPoly.zero(bound)
    return {"second_sum_trivial_class_only": full == trivial,
            "nondegenerate_sum_cancels": nondeg == zero,
            "degenerate_sum_cancels": deg == zero,
            "second_sum_triangular": tri}


def cmd_verify_super(args) -> Tuple[int, dict]:
    lam = parse_partition(args.lam)
    _guard((2 * args.bound) ** sum(lam), args.max_states)
    checks: Dict[str, bool] = {}
    want = args.check
    if want in ("psi", "all"):
        checks.update(_verify_psi(lam, args.bound))
    if want in ("tau", "all"):
        checks.update(_verify_tau(lam, args.bound))
    if want in ("theta", "all"):
        checks.update(_verify_theta(lam, args.bound))
    if want in ("C1", "all"):
        checks.update(_verify_c1(lam, args.bound))
    if want in ("C2", "all"):
        checks.update(_verify_c2(lam, args.bound))
    ok = all(checks.values())
    return (0 if ok else 1), {"checks": checks}


def cmd_verify_llt(args) -> Tuple[int, dict]:
    lam = parse_partition(args.lam)
    m = args.bound
    _guard(m ** sum(lam), args.max_states)
    checks: Dict[str, bool] = {}
    by_descent = lltmod.fillings_by_descent(lam, m)
    above = [(r, i) for i in range(1, len(lam) + 1)
             for r in range(2, lam[i - 1] + 1)]
    from itertools import combinations
    all_D = [frozenset(c) for size in range(len(above) + 1)
             for c in combinations(above, size)]
    fg_ok = map_ok = stat_ok = sym_ok = True
    for D in all_D:
        nu = lltmod.nu_hat(lam, D)
        gp = lltmod.G(nu, m)
        fg_ok &= lltmod.F(lam, D, m) == gp
        sym_ok &= symfunc.is_symmetric(gp)
        for f in by_descent.get(D, []):
            filled = lltmod.hat_llt_map(f)
            map_ok &= lltmod.llt_inv(filled) == tb.hat_inv(f)
    for fs in by_descent.values():
        for f in fs:
            stat_ok &= tb.quinv(f) == tb.hat_inv(f) - sum(
                tb.hat_arm(lam, u) for u in tb.descent_set(f))
    checks["descent_sums_match_ribbon_tuples"] = fg_ok
    checks["column_reading_preserves_inversions"] = map_ok
    checks["quinv_equals_hatinv_minus_hatarm"] = stat_ok
    checks["ribbon_tuple_sums_symmetric"] = sym_ok
    ok = all(checks.values())
    return (0 if ok else 1), {"checks": checks}


def cmd_verify_words(args) -> Tuple[int, dict]:
    try:
        alpha = tuple(int(v) for v in args.alpha.split(",")) if args.alpha else ()
    except ValueError:
        raise UsageError(f"malformed alpha {args.alpha!r}")
    if args.n != len(alpha) + 2:
        raise UsageError(f"n = {args.n} inconsistent with alpha of length {len(alpha)}")
    try:
        spec = wd.WordSpec(n=args.n, N=args.N, alpha=alpha, ell=args.ell)
    except ValueError as e:
        raise UsageError(str(e))
    checks: Dict[str, bool] = {}
    closed_ok = refined_ok = True
    for k in range(spec.L + 1):
        leq, gt = wd.split(spec, k)
        closed_ok &= wd.gf_brute(spec, gt) == wd.gf_closed(spec, k, "gt")
        closed_ok &= wd.gf_brute(spec, leq) == wd.gf_closed(spec, k, "leq")
        for pos in range(1, spec.N + 2 - spec.L):
            sub = [w for w in gt if wd.p_bottom(w, spec.n) == pos]
            refined_ok &= (wd.gf_brute(spec, sub)
                           == wd.gf_refined_closed(spec, k, "gt", pos))
            sub = [w for w in leq if wd.p_top(w, spec.n) == pos]
            refined_ok &= (wd.gf_brute(spec, sub)
                           == wd.gf_refined_closed(spec, k, "leq", pos))
    checks["split_generating_functions_closed_forms"] = closed_ok
    checks["refined_generating_functions_closed_forms"] = refined_ok
    if spec.n == 3:
        cases_ok = True
        for k in range(spec.L + 1):
            leq, gt = wd.split(spec, k)
            for pos in range(1, spec.N + 2 - spec.L):
                cases_ok &= _case_sums_hold(spec, k, pos, leq, gt)
        checks["three_letter_case_sums"] = cases_ok
    try:
        phi = wd.build_phi(spec)
        audit = True
        for w, img in phi.items():
            audit &= w.count(spec.n) + 1 == img.count(spec.n)
            audit &= wd.side_of(spec, w) == "gt" and wd.side_of(spec, img) == "leq"
            audit &= wd.quinv_prime(spec, w) == wd.quinv_prime(spec, img)
            audit &= wd.middle_subword(spec, w) == wd.middle_subword(spec, img)
        checks["pairing_exists_and_audits"] = audit
    except wd.PhiCardinalityError:
        checks["pairing_exists_and_audits"] = False
    ok = all(checks.values())
    return (0 if ok else 1), {"checks": checks}


def _case_sums_hold(spec, k, pos, leq, gt) -> bool:
    def brute(words, before):
        acc: Dict[tuple, int] = {}
        for w in words:
            if wd.top_before_bottom(w, 3) != before:
                continue
            c = wd.coinv(w)
            acc[((), c, 0)] = acc.get(((), c, 0), 0) + 1
        return MPoly(0, acc)

    ok = True
    N, L = spec.N, spec.L
    if k <= L - 1:
        sub = [w for w in gt if wd.p_bottom(w, 3) == pos]
        if 1 <= pos <= (N - k) // 2:
            ok &= brute(sub, True) == wd.lemma_sums(spec, k, pos, "gt_l")
            ok &= brute(sub, False) == wd.lemma_sums(spec, k, pos, "gt_r1")
        else:
            ok &= not brute(sub, True)
            ok &= brute(sub, False) == wd.lemma_sums(spec, k, pos, "gt_r2")
    if k >= 1:
        sub = [w for w in leq if wd.p_top(w, 3) == pos]
        if 1 <= pos <= (N - k + 1) // 2:
            ok &= brute(sub, True) == wd.lemma_sums(spec, k, pos, "leq_l")
            if pos >= L - k + 1:
                ok &= brute(sub, False) == wd.lemma_sums(spec, k, pos, "leq_r1")
            else:
                ok &= not brute(sub, False)
        else:
            ok &= not brute(sub, True)
            ok &= brute(sub, False) == wd.lemma_sums(spec, k, pos, "leq_r2")
    return ok


def cmd_verify_qseries(args) -> Tuple[int, dict]:
    M = args.max
    checks: Dict[str, bool] = {}
    checks["finite_product_expansion"] = all(
        check_qbinom_theorem(n) for n in range(M + 1))
    checks["convolution_identity"] = all(
        check_q_chu_vandermonde(m, n, k)
        for m in range(M + 1) for n in range(M + 1) for k in range(M + 1))
    checks["dual_convolution_identity"] = all(
        check_q_dual_chu(m, n, k)
        for m in range(M + 1) for n in range(m + 1) for k in range(n + 1))
    checks["telescoping_identity"] = all(
        check_q_telescope(m, n, k)
        for m in range(M + 1) for n in range(m + 1) for k in range(n + 1))

    def compositions(total):
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for rest in compositions(total - first):
                yield (first,) + rest

    coinv_ok = True
    for s in range(M + 1):
        for alpha in compositions(s):
            counts = [(i + 1, a) for i, a in enumerate(alpha)]
            brute = {}
            for w in wd.multiset_words(counts):
                c = wd.coinv(w)
                brute[((), c, 0)] = brute.get(((), c, 0), 0) + 1
            coinv_ok &= MPoly(0, brute) == qmultinom(alpha)
    checks["multinomial_counts_coinversions"] = coinv_ok
    ok = all(checks.values())
    return (0 if ok else 1), {"checks": checks}


def cmd_tazrp(args) -> Tuple[int, dict]:
    lam = parse_partition(args.lam)
    xs = [parse_fraction(v) for v in args.x.split(",")]
    if len(xs) != args.n:
        raise UsageError(f"need {args.n} site parameters, got {len(xs)}")
    t = parse_fraction(args.t)
    if any(v <= 0 for v in xs) or t < 0:
        raise UsageError("site parameters must be positive and t >= 0")
    _guard(args.n ** sum(lam), args.max_states)
    params = tz.make_params(xs, t)
    pi = tz.stationary(lam, args.n, params, args.direction)
    mu = tz.tableaux_measure(lam, args.n, params)
    diffs = [tz.config_to_text(cfg) for cfg in pi if pi[cfg] != mu[cfg]]
    art = {
        "stationary": {tz.config_to_text(c): str(v) for c, v in pi.items()},
        "tableaux_measure": {tz.config_to_text(c): str(v) for c, v in mu.items()},
        "projection": args.f_map,
        "direction": args.direction,
        "diff": sorted(diffs),
    }
    return (0 if not diffs else 1), art


# -------------------------------------------------------------------- main

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="macq",
        description="exact quinv-tableau Macdonald sums and their verification")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="emit a JSON run report")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--max-states", type=int, default=DEFAULT_BUDGET,
                       help="enumeration budget guard")

    p = sub.add_parser("compute", help="one statistic's weighted filling sum")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", choices=["quinv", "hhl"], default="quinv")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="quinv sum vs HHL sum")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("class-gf", help="row-equivalency class generating functions")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True,
                   help="row multisets bottom to top, e.g. '1,1,2;2,2,3;1'")
    common(p)
    p.set_defaults(func=cmd_class_gf)

    p = sub.add_parser("verify-axioms",
                       help="symmetry, normalization, dominance triangularity")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--bound", type=int, default=0,
                   help="signed-alphabet bound (default |lambda|)")
    common(p)
    p.set_defaults(func=cmd_verify_axioms)

    p = sub.add_parser("verify-super", help="signed-filling operator checks")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--check", choices=["C1", "C2", "psi", "theta", "tau", "all"],
                   default="all")
    common(p)
    p.set_defaults(func=cmd_verify_super)

    p = sub.add_parser("verify-llt", help="ribbon-tuple identities")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--bound", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_verify_llt)

    p = sub.add_parser("verify-words", help="word generating-function identities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--alpha", default="",
                   help="middle-letter counts, e.g. '1,1'")
    p.add_argument("--ell", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_verify_words)

    p = sub.add_parser("verify-qseries", help="q-series identity sweep")
    p.add_argument("--max", type=int, default=8)
    common(p)
    p.set_defaults(func=cmd_verify_qseries)

    p = sub.add_parser("tazrp", help="exact stationary law vs tableau measure")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True, help="site parameters, e.g. '1,2,3'")
    p.add_argument("--t", required=True, help="rational, e.g. '1/2'")
    p.add_argument("--f-map", dest="f_map", choices=["bottom-row"],
                   default="bottom-row")
    p.add_argument("--direction", choices=["down", "up"], default="down",
                   help="jump direction on the ring (down: j to j-1)")
    common(p)
    p.set_defaults(func=cmd_tazrp)

    return ap


def _print_human(report: dict) -> None:
    art = report["artifacts"]
    print(f"command: {report['command']}")
    print(f"outcome: {report['outcome']}")
    for key, val in art.items():
        if isinstance(val, dict) and "text" in val and "terms" in val:
            print(f"{key}: {val['text']}")
        elif isinstance(val, dict):
            for k2, v2 in val.items():
                print(f"{key}.{k2}: {v2}")
        else:
            print(f"{key}: {val}")


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    start = time.perf_counter()
    try:
        code, artifacts = args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start
    outcome = {0: "pass", 1: "finding"}[code]
    report = {
        "command": args.command,
        "parameters": {k: v for k, v in sorted(vars(args).items())
                       if k not in ("func", "json") and not callable(v)},
        "outcome": outcome,
        "artifacts": artifacts,
    }
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2, default=str))
    else:
        _print_human(report)
    print(f"wall-time: {elapsed:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
