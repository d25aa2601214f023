"""Command-line surface: query one code, sweep parameter grids, run verifiers.

    bchq query --q 4 --m 2 --delta 6
    bchq sweep --q 2,3 --m 2..5 --format csv --out table.csv
    bchq verify all --max-n 255

Sweep output is deterministic: rows are ordered lexicographically by
(q, m, delta), files are written atomically (temp file + rename), and
identical invocations produce byte-identical bytes.  Exit codes: 0 success,
1 refuted claims (verify), 2 bad configuration or violated preconditions.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, fields

from . import __version__, oracle
from .bchcore import (
    construct,
    effective_designed_distance,
    formula_delta_limit,
    formula_dimension_value,
)
from .bounds import farr_condition, refined_min_distance
from .duality import (
    CLOSED_FORM,
    COSET_ORACLE,
    NotCoveredByTheorem,
    coset_oracle_delta_max,
    delta_max_euclidean,
    delta_max_hermitian,
)
from .bchcore import OutOfTheoremRange
from .modnum import DesignParams, cyclotomic_coset
from .quantum import DualContainmentError, css_from_bch, hermitian_from_bch

REGIMES = ("euclid", "hermitian", "both")
DELTA_POLICIES = ("delta-max", "formula-range", "all")
VERIFY_SCOPES = ("theorem2", "theorem4", "theorem7", "corollary8",
                 "lemma9", "lemma10", "all")


@dataclass
class TableRow:
    """One sweep result; absent quantities are None (null/empty), never 0."""

    q: int
    m: int
    n: int
    delta: int
    k_classical: int
    delta_max_euclid: int | None
    contains_euclid_dual: bool | None
    delta_max_herm: int | None
    contains_herm_dual: bool | None
    k_quantum_css: int | None
    k_quantum_herm: int | None
    d_lower: int
    purity_up_to: int | None
    farr_refinement: bool | None
    verdict_method: str


def _is_square(q: int) -> int | None:
    r = int(q ** 0.5)
    while r * r < q:
        r += 1
    return r if r * r == q else None


def _pair_rows(q: int, m: int, delta_policy: str, regime: str) -> list[TableRow]:
    """All rows for one (q, m): a single incremental defining-set walk."""
    n = q ** m - 1
    if n < 2:
        return []
    want_euclid = regime in ("euclid", "both")
    q0 = _is_square(q)
    want_herm = regime in ("hermitian", "both") and q0 is not None

    methods = set()
    thr_euclid = dm_euclid = None
    if want_euclid:
        if m >= 2:
            dm_euclid = delta_max_euclidean(q, m)
            thr_euclid = dm_euclid
            methods.add(CLOSED_FORM)
        else:
            thr_euclid = coset_oracle_delta_max(n, q, n - 1)
            methods.add(COSET_ORACLE)
    thr_herm = dm_herm = None
    if want_herm:
        if m != 2:
            dm_herm = delta_max_hermitian(q0, m)
            thr_herm = dm_herm
            methods.add(CLOSED_FORM)
        else:
            thr_herm = coset_oracle_delta_max(n, q, -q0)
            methods.add(COSET_ORACLE)
    method = methods.pop() if len(methods) == 1 else "mixed"

    if delta_policy == "delta-max":
        hi = max((t for t in (thr_euclid, thr_herm) if t is not None), default=1)
    elif delta_policy == "formula-range":
        hi = formula_delta_limit(q, m)
    else:
        hi = n
    hi = min(hi, n)

    rows = []
    residues: set[int] = set()
    formula_limit = formula_delta_limit(q, m)
    for delta in range(2, hi + 1):
        x = delta - 1
        if x not in residues:
            residues.update(cyclotomic_coset(n, q, x).elements)
        k = n - len(residues)
        ce = (delta <= thr_euclid) if thr_euclid is not None else None
        ch = (delta <= thr_herm) if thr_herm is not None else None
        purity = None
        if ce:
            purity = (dm_euclid if dm_euclid is not None else thr_euclid) + 1
        elif ch:
            purity = (dm_herm if dm_herm is not None else thr_herm) + 1
        farr = None
        if delta <= formula_limit:
            farr = farr_condition(DesignParams(q, m, delta))
        rows.append(TableRow(
            q=q, m=m, n=n, delta=delta, k_classical=k,
            delta_max_euclid=dm_euclid,
            contains_euclid_dual=ce,
            delta_max_herm=dm_herm,
            contains_herm_dual=ch,
            k_quantum_css=(2 * k - n) if ce else None,
            k_quantum_herm=(2 * k - n) if ch else None,
            d_lower=delta,
            purity_up_to=purity,
            farr_refinement=farr,
            verdict_method=method,
        ))
    return rows


def _row_field_names() -> list[str]:
    return [f.name for f in fields(TableRow)]


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _render_csv(rows: list[TableRow]) -> str:
    names = _row_field_names()
    lines = [",".join(names)]
    for r in rows:
        d = asdict(r)
        lines.append(",".join(_csv_cell(d[name]) for name in names))
    return "\n".join(lines) + "\n"


def _render_json(rows: list[TableRow], budgets: dict) -> str:
    names = _row_field_names()
    payload = {
        "meta": {"tool_version": __version__, "budgets": budgets},
        "rows": [{name: asdict(r)[name] for name in names} for r in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def _atomic_write(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".bchq-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------
# query

def _query_record(q: int, m: int, delta: int, regime: str) -> dict:
    params = DesignParams(q, m, delta)
    code = construct(params, with_generator=False)
    ds = code.defining
    rec: dict = {
        "q": q, "m": m, "delta": delta, "n": params.n,
        "defining_set": list(ds.residues),
        "cosets": [list(c.elements) for c in ds.cosets],
        "k_classical": code.dimension,
        "effective_designed_distance": effective_designed_distance(ds),
    }
    limit = formula_delta_limit(q, m)
    value = formula_dimension_value(q, m, delta)
    rec["dimension_formula"] = {
        "in_range": delta <= limit,
        "range_limit": limit,
        "value": value,
        "matches_exact": value == code.dimension,
    }
    if delta <= limit:
        rec["farr_condition"] = farr_condition(params)
        est = refined_min_distance(params)
        rec["distance_estimate"] = {
            "lower": est.lower, "upper": est.upper,
            "exact": est.exact, "source": est.source,
        }
    else:
        rec["farr_condition"] = None
        rec["distance_estimate"] = None

    if regime in ("euclid", "both"):
        e: dict = {}
        if m >= 2:
            dm = delta_max_euclidean(q, m)
            e["delta_max"] = dm
            e["contains_dual"] = delta <= dm
            e["method"] = CLOSED_FORM
        else:
            thr = coset_oracle_delta_max(params.n, q, params.n - 1)
            e["delta_max"] = None
            e["contains_dual"] = delta <= thr
            e["method"] = COSET_ORACLE
        if e["contains_dual"] and m >= 2:
            qp = css_from_bch(q, m, delta)
            e["quantum"] = {"n": qp.n, "k": qp.k, "d_lower": qp.d_lower,
                            "purity_up_to": qp.purity_up_to,
                            "base_field": qp.base_field}
        else:
            e["quantum"] = None
        rec["euclidean"] = e
    q0 = _is_square(q)
    if regime in ("hermitian", "both"):
        if q0 is None:
            rec["hermitian"] = None
        else:
            h: dict = {}
            try:
                dm = delta_max_hermitian(q0, m)
                h["delta_max"] = dm
                h["contains_dual"] = delta <= dm
                h["method"] = CLOSED_FORM
            except NotCoveredByTheorem:
                thr = coset_oracle_delta_max(params.n, q, -q0)
                h["delta_max"] = None
                h["contains_dual"] = delta <= thr
                h["method"] = COSET_ORACLE
            h["quantum"] = None
            if h["contains_dual"]:
                try:
                    qp = hermitian_from_bch(q0, m, delta)
                    h["quantum"] = {"n": qp.n, "k": qp.k, "d_lower": qp.d_lower,
                                    "purity_up_to": qp.purity_up_to,
                                    "base_field": qp.base_field}
                except OutOfTheoremRange as e:
                    h["quantum_note"] = str(e)
            rec["hermitian"] = h
    return rec


def _print_query_human(rec: dict) -> None:
    print(f"BCH code: n = {rec['n']}, alphabet F_{rec['q']}, "
          f"designed distance {rec['delta']}")
    print(f"  defining set Z ({len(rec['defining_set'])} residues): "
          f"{{{', '.join(map(str, rec['defining_set']))}}}")
    reps = ", ".join("C_%d=%s" % (c[0] if isinstance(c, list) and c else 0,
                                  "{" + ",".join(map(str, c)) + "}")
                     for c in rec["cosets"])
    print(f"  cosets: {reps}")
    print(f"  exact dimension k = {rec['k_classical']}")
    f = rec["dimension_formula"]
    if f["in_range"]:
        print(f"  closed-form dimension: {f['value']} (in range, matches exact)")
    else:
        tail = (f"!= exact {rec['k_classical']}" if not f["matches_exact"]
                else "happens to match")
        print(f"  closed-form dimension: OUT OF RANGE "
              f"(delta {rec['delta']} > limit {f['range_limit']}); "
              f"formula value {f['value']} {tail}")
    print(f"  effective designed distance: {rec['effective_designed_distance']}")
    if rec.get("farr_condition") is not None:
        est = rec["distance_estimate"]
        extra = f", exact {est['exact']}" if est["exact"] else ""
        print(f"  sphere-packing refinement: condition "
              f"{'holds' if rec['farr_condition'] else 'fails'}; "
              f"distance in [{est['lower']}, {est['upper']}]{extra} "
              f"({est['source']})")
    for name, key in (("Euclidean", "euclidean"), ("Hermitian", "hermitian")):
        block = rec.get(key)
        if block is None:
            if key in rec:
                print(f"  {name}: not applicable (alphabet is not a square)")
            continue
        dm = block["delta_max"]
        dm_text = f"delta_max = {dm}" if dm is not None else "no closed form"
        print(f"  {name}: {dm_text}; contains dual: "
              f"{'yes' if block['contains_dual'] else 'no'} "
              f"[{block['method']}]")
        if block.get("quantum"):
            qp = block["quantum"]
            print(f"    quantum: [[{qp['n']}, {qp['k']}, >={qp['d_lower']}]]_"
                  f"{qp['base_field']}, pure up to {qp['purity_up_to']}")
        elif block.get("quantum_note"):
            print(f"    quantum: {block['quantum_note']}")


def cmd_query(args) -> int:
    rec = _query_record(args.q, args.m, args.delta, args.regime)
    if args.format == "json":
        print(json.dumps(rec, indent=2))
    else:
        _print_query_human(rec)
    return 0


# ---------------------------------------------------------------------------
# sweep

def cmd_sweep(args) -> int:
    qs = args.q
    ms = args.m
    tasks = []
    for q in qs:
        for m in ms:
            if q ** m - 1 <= args.max_n:
                tasks.append((q, m))
    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        chunks = list(pool.map(
            lambda t: _pair_rows(t[0], t[1], args.delta_policy, args.regime),
            tasks))
    rows = [r for chunk in chunks for r in chunk]
    rows.sort(key=lambda r: (r.q, r.m, r.delta))
    budgets = {"max_n": args.max_n, "regime": args.regime,
               "delta_policy": args.delta_policy,
               "q": list(qs), "m": list(ms)}
    text = (_render_json(rows, budgets) if args.format == "json"
            else _render_csv(rows))
    if args.out:
        _atomic_write(args.out, text)
        print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# verify

def _verify_reports(scope: str, max_n: int, budget: int) -> list[oracle.OracleReport]:
    reports: list[oracle.OracleReport] = []
    cap = min(max_n + 1, oracle.TRIPLE_FIELD_CAP)
    if scope in ("theorem2", "all"):
        reports += oracle.sweep_euclidean_equivalence(max_n=max_n)
        reports += oracle.sweep_triple_agreement(
            max_field_order=cap, regimes=(oracle.EUCLIDEAN,))
    if scope in ("theorem4", "all"):
        reports += oracle.sweep_hermitian_equivalence(max_n=max_n)
        reports += oracle.sweep_triple_agreement(
            max_field_order=cap, regimes=(oracle.HERMITIAN,))
    if scope in ("theorem7", "all"):
        reports += oracle.sweep_dimension_formula(max_n=max_n)
        reports += oracle.sweep_coset_lemmas(max_n=max_n)
    if scope in ("corollary8", "all"):
        reports += oracle.sweep_farr_refinement(max_n=min(max_n, 31),
                                                budget=budget)
    if scope in ("lemma9", "all"):
        reports += oracle.sweep_dual_distance_bounds(
            oracle.EUCLIDEAN, max_n=min(max_n, 255), budget=budget)
    if scope in ("lemma10", "all"):
        reports += oracle.sweep_dual_distance_bounds(
            oracle.HERMITIAN, max_n=min(max_n, 255), budget=budget)
    return reports


def cmd_verify(args) -> int:
    reports = _verify_reports(args.scope, args.max_n, args.budget)
    n_confirmed = n_refuted = n_skipped = 0
    for r in reports:
        if r.verdict == oracle.REFUTED:
            n_refuted += 1
            print(f"REFUTED  {r.claim} {r.params}")
            print(f"         evidence: {r.evidence}")
        elif r.verdict == oracle.SKIPPED:
            n_skipped += 1
            if args.verbose:
                print(f"skipped  {r.claim} {r.params}: "
                      f"{r.evidence.get('reason', '')}")
        else:
            n_confirmed += 1
            if args.verbose:
                print(f"confirmed {r.claim} {r.params}")
    print(f"verify {args.scope}: {n_confirmed} confirmed, "
          f"{n_refuted} refuted, {n_skipped} skipped")
    if args.out:
        payload = {
            "meta": {"tool_version": __version__,
                     "budgets": {"max_n": args.max_n, "budget": args.budget},
                     "scope": args.scope},
            "reports": [{"claim": r.claim, "params": r.params,
                         "verdict": r.verdict, "evidence": r.evidence,
                         "cost": r.cost} for r in reports],
        }
        _atomic_write(args.out, json.dumps(payload, indent=2) + "\n")
    if n_refuted:
        return 1
    if args.strict and n_skipped:
        return 1
    return 0


# ---------------------------------------------------------------------------
# argument parsing

def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")


def _parse_int_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected N, N..M or comma list, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bchq",
        description="BCH dual containment, dimensions, distance bounds and "
                    "derived quantum code parameters")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("query", help="report every derived quantity for one code")
    p.add_argument("--q", type=int, required=True, help="alphabet size (prime power)")
    p.add_argument("--m", type=int, required=True, help="length exponent: n = q^m - 1")
    p.add_argument("--delta", type=int, required=True, help="designed distance")
    p.add_argument("--regime", choices=REGIMES, default="both")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("sweep", help="emit a parameter table over a grid")
    p.add_argument("--q", type=_parse_int_list, required=True,
                   help="comma-separated alphabet sizes, e.g. 2,3,4")
    p.add_argument("--m", type=_parse_int_range, required=True,
                   help="exponent range, e.g. 2..8 or 2,3,5")
    p.add_argument("--delta-policy", choices=DELTA_POLICIES, default="delta-max")
    p.add_argument("--regime", choices=REGIMES, default="both")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--max-n", type=int, default=oracle.SWEEP_MAX_N)
    p.add_argument("--out", help="output path (atomic write); default stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run brute-force verification sweeps")
    p.add_argument("scope", choices=VERIFY_SCOPES)
    p.add_argument("--max-n", type=int, default=255)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET,
                   help="enumeration budget in codeword evaluations")
    p.add_argument("--strict", action="store_true",
                   help="treat skipped_too_large as failure")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--out", help="write the full report as JSON")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, NotCoveredByTheorem, OutOfTheoremRange,
            DualContainmentError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
