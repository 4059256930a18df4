"""Command-line interface.

Code specs on the command line use the grammar
"q=<int> n=<int> cosets=<r1,r2,...>".  Exit codes: 0 success, 1 a
verification or retrieval mismatch, 2 usage errors (including malformed
code specs, reported with the offending position).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import protocol, reed_muller, tables
from .cyclic import CodeSpecError, code_from_cosets, coset_representatives, cyclotomic_coset, parse_code_spec
from .distance import DEEP_BUDGET, DEFAULT_BUDGET, DEFAULT_SEARCH_ITERS, min_distance
from .pir import SchemeError, evaluate_scheme
from .search import SearchSpec, search_pir_codes

USAGE_ERROR = 2


def _parse_spec(text: str, defining: bool = False):
    try:
        code = parse_code_spec(text)
    except CodeSpecError as exc:
        marker = " " * exc.pos + "^"
        sys.stderr.write(f"bad code spec: {exc}\n  {text}\n  {marker}\n")
        raise SystemExit(USAGE_ERROR)
    if defining:
        code = code_from_cosets(code.coset_reps(), code.n, code.q, complement=True)
    return code


def _budget(args) -> int:
    if getattr(args, "deep", False):
        return DEEP_BUDGET
    return args.budget


def _emit(args, payload: dict, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _add_common(p):
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max enumerated words")
    p.add_argument("--deep", action="store_true", help=f"raise the budget to {DEEP_BUDGET}")
    p.add_argument("--iters", type=int, default=DEFAULT_SEARCH_ITERS, help="low-weight search restarts")


def _cmd_coset(args):
    n, q = args.n, args.q
    values = args.reps if args.reps else list(coset_representatives(n, q))
    payload = []
    lines = []
    for s in values:
        coset = cyclotomic_coset(s, n, q)
        payload.append({"rep": min(coset), "coset": list(coset)})
        lines.append(f"U_{min(coset)} = {{{', '.join(map(str, coset))}}}")
    _emit(args, {"n": n, "q": q, "cosets": payload}, lines)
    return 0


def _cmd_code_info(args):
    code = _parse_spec(args.spec, args.defining)
    report = min_distance(code, budget=_budget(args), search_iters=args.iters, seed=args.seed)
    payload = {
        "spec": code.spec_string(),
        "params": [code.n, code.dim],
        "bch": code.bch_bound(),
        "distance": report.to_json(),
    }
    d_text = f"d = {report.lower}" if report.exact else f"d in [{report.lower}, {report.upper}]"
    _emit(
        args,
        payload,
        [f"[{code.n},{code.dim}] over GF({code.q})", f"cosets: {code.spec_string()}", f"BCH bound: {code.bch_bound()}", f"{d_text}  ({report.method})"],
    )
    return 0


def _cmd_star(args):
    a = _parse_spec(args.spec1)
    b = _parse_spec(args.spec2)
    try:
        out = a.star(b)
    except ValueError as exc:
        sys.stderr.write(f"{exc}\n")
        return USAGE_ERROR
    _emit(args, {"spec": out.spec_string(), "params": [out.n, out.dim]}, [out.spec_string(), f"[{out.n},{out.dim}]"])
    return 0


def _cmd_dual(args):
    out = _parse_spec(args.spec).dual()
    _emit(args, {"spec": out.spec_string(), "params": [out.n, out.dim]}, [out.spec_string(), f"[{out.n},{out.dim}]"])
    return 0


def _cmd_rm(args):
    r_or_c, m = args.r, args.m
    if args.variant == "build":
        n, k, d = reed_muller.rm_parameters(r_or_c, m)
        payload = {"params": [n, k, d]}
        lines = [f"[{n},{k},{d}]"]
    elif args.variant in ("puncture", "shorten"):
        G = reed_muller.puncture_at_zero(r_or_c, m) if args.variant == "puncture" else reed_muller.shorten_at_zero(r_or_c, m)
        _, k, d = reed_muller.rm_parameters(r_or_c, m)
        d = d - 1 if args.variant == "puncture" else d
        payload = {"params": [G.shape[1], G.shape[0], d]}
        lines = [f"[{G.shape[1]},{G.shape[0]},{d}]"]
    else:  # as-cyclic
        code = reed_muller.punctured_rm_as_cyclic(r_or_c, m, include_zero_coset=not args.drop_zero_coset)
        payload = {"spec": code.spec_string(), "params": [code.n, code.dim]}
        lines = [code.spec_string(), f"[{code.n},{code.dim}]"]
    _emit(args, payload, lines)
    return 0


def _cmd_pir_eval(args):
    C = _parse_spec(args.storage)
    D = _parse_spec(args.retrieval)
    try:
        params = evaluate_scheme(C, D, budget=_budget(args), search_iters=args.iters, seed=args.seed, full_reports=args.full)
    except SchemeError as exc:
        sys.stderr.write(f"{exc}\n")
        return USAGE_ERROR
    payload = params.to_json()
    lines = [
        f"C = [{C.n},{C.dim}], D = [{D.n},{D.dim}], C*D = [{params.star.n},{params.star.dim}]",
        f"retrieved per round: {params.retrieved_per_round}",
        f"rate: {params.retrieved_per_round}/{params.n}",
        f"privacy: {params.privacy_lo}" if params.privacy_exact else f"privacy in [{params.privacy_lo}, {params.privacy_hi}]",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_pir_simulate(args):
    C = _parse_spec(args.storage)
    D = _parse_spec(args.retrieval)
    db = protocol.random_database(args.files, args.rows, C.dim, C.q, seed=args.seed)
    transcript = [] if args.transcript else None
    failures = 0
    indices = [args.file_index] if args.file_index else range(1, args.files + 1)
    accounting = None
    for i in indices:
        out, accounting = protocol.run_full_retrieval(db, C, D, i, seed=args.seed, transcript=transcript)
        if not np.array_equal(out, db.file(i)):
            failures += 1
    if args.transcript:
        protocol.write_transcript(args.transcript, transcript)
    payload = {
        "files": args.files,
        "rows_per_file": args.rows,
        "failures": failures,
        "rounds": accounting["rounds"],
        "downloads": accounting["downloads"],
        "nominal_rate": str(accounting["nominal_rate"]),
        "effective_rate": str(accounting["effective_rate"]),
    }
    lines = [
        f"retrieved {len(list(indices))} file(s), failures: {failures}",
        f"last retrieval: {accounting['rounds']} round(s), {accounting['downloads']} symbols down",
        f"nominal rate {accounting['nominal_rate']}, effective {accounting['effective_rate']}",
    ]
    _emit(args, payload, lines)
    return 1 if failures else 0


def _cmd_pir_privacy(args):
    D = _parse_spec(args.retrieval)
    verdict = protocol.privacy_check(D, args.t, mode=args.mode, trials=args.trials, seed=args.seed)
    payload = {
        "t": verdict.t,
        "ok": verdict.ok,
        "mode": verdict.mode,
        "checked": verdict.checked,
        "witness": list(verdict.witness) if verdict.witness else None,
    }
    lines = [f"t={verdict.t}: {'pass' if verdict.ok else 'FAIL'} ({verdict.mode}, {verdict.checked} subsets)"]
    if verdict.witness:
        lines.append(f"witness subset: {verdict.witness}")
    _emit(args, payload, lines)
    return 0 if verdict.ok else 1


def _cmd_search(args):
    min_rate = None
    if args.min_rate:
        if "/" in args.min_rate:
            num, den = args.min_rate.split("/", 1)
            min_rate = Fraction(int(num), int(den))
        else:
            min_rate = Fraction(args.min_rate)
    fixed_c = None
    if args.fixed_c:
        fixed_c = _parse_spec(args.fixed_c).coset_reps()
    spec = SearchSpec(
        n=args.n,
        q=args.q,
        max_c_cosets=args.max_c,
        max_d_cosets=args.max_d,
        objective=args.objective,
        min_privacy=args.min_privacy,
        min_rate=min_rate,
        budget=_budget(args),
        search_iters=args.iters,
        d_complements=args.complements,
        fixed_c=fixed_c,
        max_results=args.limit,
        time_budget_s=args.time_budget,
    )
    result = search_pir_codes(spec)
    payload = {
        "candidates": result.candidates_seen,
        "partial": result.partial,
        "hits": [h.to_json() for h in result.hits],
    }
    lines = [f"{len(result.hits)} hit(s) from {result.candidates_seen} retrieval candidates" + (" [partial]" if result.partial else "")]
    for h in result.hits:
        tag = "privacy" if h.privacy_exact else "privacy>="
        n = h.storage.n
        lines.append(
            f"C={{{','.join(map(str, h.storage.coset_reps()))}}} D={{{','.join(map(str, h.retrieval.coset_reps()))}}} "
            f"{tag} {h.privacy_lo}, rate {n - h.star_dim}/{n}"
        )
    _emit(args, payload, lines)
    return 0


def _cmd_table(args):
    outcome = tables.reproduce_table(args.table_id, budget=args.budget, deep=args.deep, search_iters=args.iters, seed=args.seed)
    mismatches = outcome.mismatch_cells()
    if args.json:
        print(json.dumps(outcome.to_json(), indent=2))
    else:
        counts = outcome.status_counts()
        print(f"table {args.table_id}: {counts[tables.MATCH]} match, {counts[tables.BOUND_CONSISTENT]} bound-consistent, {counts[tables.MISMATCH]} mismatch")
        for row in outcome.rows:
            cols = []
            for col in tables.COLUMNS:
                cell = row.cells[col]
                rep = cell.report
                d_txt = f"{rep.lower}" if rep.exact else f"[{rep.lower},{rep.upper}]"
                status = cell.dist_status or cell.dim_status or "-"
                cols.append(f"{col}=[{cell.n},{cell.k},{d_txt}]{'' if status != tables.MISMATCH else '!'}")
            priv = f"{row.privacy_lo}" if row.privacy_exact else f"[{row.privacy_lo},{row.privacy_hi}]"
            print(f"  row {row.index}: {' '.join(cols)} privacy {priv} ({row.privacy_status}) rate {row.rate_string()} ({row.rate_status})")
            for note in row.notes:
                print(f"    note: {note}")
        if mismatches:
            print(f"  mismatched cells: {mismatches}")
    return 1 if mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclopir", description="cyclic-code PIR laboratory")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("coset", help="list cyclotomic cosets")
    sp.add_argument("n", type=int)
    sp.add_argument("q", type=int, nargs="?", default=2)
    sp.add_argument("reps", type=int, nargs="*")
    _add_common(sp)
    sp.set_defaults(func=_cmd_coset)

    sp = sub.add_parser("code", help="code inspection")
    code_sub = sp.add_subparsers(dest="subcommand", required=True)
    info = code_sub.add_parser("info", help="parameters, BCH bound, distance report")
    info.add_argument("spec")
    info.add_argument("--defining", action="store_true", help="treat the cosets as the defining set")
    _add_common(info)
    info.set_defaults(func=_cmd_code_info)

    sp = sub.add_parser("star", help="star (componentwise) product of two codes")
    sp.add_argument("spec1")
    sp.add_argument("spec2")
    _add_common(sp)
    sp.set_defaults(func=_cmd_star)

    sp = sub.add_parser("dual", help="dual code")
    sp.add_argument("spec")
    _add_common(sp)
    sp.set_defaults(func=_cmd_dual)

    sp = sub.add_parser("rm", help="Reed-Muller constructions")
    sp.add_argument("variant", choices=["build", "puncture", "shorten", "as-cyclic"])
    sp.add_argument("r", type=int, help="order (or weight threshold for as-cyclic)")
    sp.add_argument("m", type=int)
    sp.add_argument("--drop-zero-coset", action="store_true", help="as-cyclic: leave the coset {0} out")
    _add_common(sp)
    sp.set_defaults(func=_cmd_rm)

    sp = sub.add_parser("pir", help="scheme evaluation and simulation")
    pir_sub = sp.add_subparsers(dest="subcommand", required=True)

    ev = pir_sub.add_parser("eval", help="privacy and rate of a (C, D) pair")
    ev.add_argument("storage")
    ev.add_argument("retrieval")
    ev.add_argument("--full", action="store_true", help="distance reports for all five codes")
    _add_common(ev)
    ev.set_defaults(func=_cmd_pir_eval)

    sim = pir_sub.add_parser("simulate", help="run the retrieval protocol end to end")
    sim.add_argument("storage")
    sim.add_argument("retrieval")
    sim.add_argument("--files", type=int, default=2)
    sim.add_argument("--rows", type=int, default=1)
    sim.add_argument("--file-index", type=int, default=None)
    sim.add_argument("--transcript", help="write per-round JSON lines here")
    _add_common(sim)
    sim.set_defaults(func=_cmd_pir_simulate)

    pc = pir_sub.add_parser("privacy-check", help="rank criterion over t-subsets of servers")
    pc.add_argument("retrieval")
    pc.add_argument("--t", type=int, required=True)
    pc.add_argument("--mode", choices=["auto", "exhaustive", "sampled"], default="auto")
    pc.add_argument("--trials", type=int, default=10000)
    _add_common(pc)
    pc.set_defaults(func=_cmd_pir_privacy)

    sp = sub.add_parser("search", help="search coset unions for good schemes")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--max-c", type=int, default=2)
    sp.add_argument("--max-d", type=int, default=5)
    sp.add_argument("--objective", choices=["privacy", "rate"], default="privacy")
    sp.add_argument("--min-privacy", type=int, default=None)
    sp.add_argument("--min-rate", default=None)
    sp.add_argument("--complements", action="store_true", help="retrieval candidates are complements of coset unions")
    sp.add_argument("--fixed-c", default=None, help="pin the storage code (code spec)")
    sp.add_argument("--limit", type=int, default=10)
    sp.add_argument("--time-budget", type=float, default=None)
    _add_common(sp)
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("table", help="recompute a bundled reference table")
    sp.add_argument("table_id", type=int, choices=sorted(tables.REFERENCE_TABLES))
    _add_common(sp)
    sp.set_defaults(func=_cmd_table)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
