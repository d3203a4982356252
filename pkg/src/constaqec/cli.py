"""Command-line interface.

Subcommands:
  family        print one family's quantum code table
  verify-tables regenerate the six reference tables and worked examples
  code-info     inspect a single classical constacyclic code
  dual-check    dual-containment status of a single code
  crosscheck    lemma re-proofs and criterion-vs-oracle agreement sweeps

Exit codes: 0 success, 1 a computational claim failed, 2 usage or
constraint error.  All output is deterministic for a fixed invocation;
JSON documents re-serialise byte-identically after a parse round trip.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify
from .aqecc import OptimalityError, emit_table, enumerate_family
from .codes import (
    DEFAULT_ENUM_BUDGET,
    DEFAULT_MDS_BUDGET,
    ConstacyclicCode,
    hermitian_containment_oracle,
)
from .cosets import CosetContext, DefiningSet, dual_contained_in
from .families import CONSTRUCTIONS, FamilyConstraintError, FamilySpec, family_defining_set


def _dump_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _add_family_flags(sp, required: bool = True) -> None:
    sp.add_argument("--construction", choices=CONSTRUCTIONS, required=required)
    sp.add_argument("--q", type=int, required=required)
    sp.add_argument("--lambda", dest="lam", type=int, default=None)
    sp.add_argument("--r", type=int, default=None)


def _add_output_flags(sp) -> None:
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--out", default=None, help="write the document to a file")


def _add_budget_flags(sp) -> None:
    sp.add_argument("--budget-enum", type=int, default=DEFAULT_ENUM_BUDGET,
                    help="codeword enumeration cap (field-size^k)")
    sp.add_argument("--budget-mds", type=int, default=DEFAULT_MDS_BUDGET,
                    help="column-subset certificate cap (C(n,k)*k^3)")


def _add_explicit_code_flags(sp) -> None:
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--eta-exp", dest="eta_exp", type=int, default=None)
    sp.add_argument("--members", default=None,
                    help="comma-separated defining set residues")
    sp.add_argument("--s", type=int, default=None,
                    help="coset count when using the family flags")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="constaqec",
        description="Constacyclic-code families of optimal asymmetric quantum codes",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("family", help="emit one family's quantum code table")
    _add_family_flags(sp)
    _add_output_flags(sp)

    sp = sub.add_parser("verify-tables", help="check the six reference tables")
    sp.add_argument("--deep", action="store_true",
                    help="also verify exact distances for small-q tables")
    _add_budget_flags(sp)
    _add_output_flags(sp)

    sp = sub.add_parser("code-info", help="report one classical code")
    _add_family_flags(sp, required=False)
    _add_explicit_code_flags(sp)
    _add_budget_flags(sp)
    _add_output_flags(sp)

    sp = sub.add_parser("dual-check", help="dual containment of one code")
    _add_family_flags(sp, required=False)
    _add_explicit_code_flags(sp)
    _add_output_flags(sp)

    sp = sub.add_parser("crosscheck", help="criterion-vs-oracle sweeps")
    _add_family_flags(sp, required=False)
    sp.add_argument("--s", type=int, default=None)
    sp.add_argument("--t", type=int, default=None)
    sp.add_argument("--q-max", type=int, default=verify.LEMMA_Q_MAX,
                    help="upper q for the lemma re-proof sweep")
    _add_output_flags(sp)

    return ap


def _write(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _code_from_args(args) -> ConstacyclicCode:
    """Either the family route (construction/q/count) or fully explicit."""
    if args.construction is not None:
        if args.s is None:
            raise FamilyConstraintError("family mode needs --s (coset count)")
        spec = FamilySpec(args.construction, args.q, lam=args.lam, r=args.r)
        return ConstacyclicCode.from_family(spec, args.s)
    missing = [
        name
        for name, val in (("--q", args.q), ("--n", args.n),
                          ("--r", args.r), ("--eta-exp", args.eta_exp),
                          ("--members", args.members))
        if val is None
    ]
    if missing:
        raise FamilyConstraintError(
            "explicit mode needs " + ", ".join(missing)
        )
    ctx = CosetContext(q=args.q, n=args.n, r=args.r)
    members = [int(tok) for tok in str(args.members).split(",") if tok.strip()]
    ds = DefiningSet.from_members(ctx, members)
    return ConstacyclicCode(ds, args.eta_exp)


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def cmd_family(args) -> int:
    spec = FamilySpec(args.construction, args.q, lam=args.lam, r=args.r)
    codes = enumerate_family(spec)
    if not codes:
        raise FamilyConstraintError(
            f"{spec.label()} has an empty code range (all pairs degenerate)"
        )
    _write(args, emit_table(codes, args.format))
    return 0


def _render_verify_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(report)
    lines = []
    for name, entry in sorted(report["tables"].items()):
        status = "PASS" if entry["ok"] else f"FAIL ({entry['detail']})"
        lines.append(f"{name}: {status} ({entry['codes']} codes)")
    for name, entry in sorted(report["examples"].items()):
        status = "PASS" if entry["ok"] else f"FAIL ({entry['detail']})"
        lines.append(f"example {name}: {status}")
    if "deep" in report:
        for name, entry in sorted(report["deep"].items()):
            status = "PASS" if entry["ok"] else f"FAIL ({entry['detail']})"
            note = f" [{entry['detail']}]" if entry["ok"] and entry["detail"] else ""
            lines.append(f"deep {name}: {status}{note}")
    n_tables = len(report["tables"])
    ok_tables = sum(e["ok"] for e in report["tables"].values())
    n_ex = len(report["examples"])
    ok_ex = sum(e["ok"] for e in report["examples"].values())
    lines.append(
        f"{ok_tables}/{n_tables} tables, {ok_ex}/{n_ex} examples "
        + ("PASS" if report["ok"] else "FAIL")
    )
    return "\n".join(lines) + "\n"


def cmd_verify_tables(args) -> int:
    report = verify.verify_reference_tables(
        deep=args.deep,
        enum_budget=args.budget_enum,
        mds_budget=args.budget_mds,
    )
    _write(args, _render_verify_report(report, args.format))
    return 0 if report["ok"] else 1


def _render_code_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(report)
    lines = []
    for key in sorted(report):
        value = report[key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def cmd_code_info(args) -> int:
    code = _code_from_args(args)
    report = code.report(args.budget_enum, args.budget_mds)
    _write(args, _render_code_report(report, args.format))
    return 0


def cmd_dual_check(args) -> int:
    code = _code_from_args(args)
    ds = code.defining_set
    report = {
        "q": code.q,
        "n": code.n,
        "k": code.k,
        "dual_containing": ds.is_dual_containing(),
        "defining_set": ds.to_json_dict(),
        "dual_defining_set": ds.hermitian_dual().to_json_dict(),
    }
    _write(args, _render_code_report(report, args.format))
    return 0


def _crosscheck_single(args) -> tuple[dict, bool]:
    spec = FamilySpec(args.construction, args.q, lam=args.lam, r=args.r)
    s = args.s if args.s is not None else spec.count_max
    t = args.t if args.t is not None else s
    z1 = family_defining_set(spec, t)
    z2 = family_defining_set(spec, s)
    predicted = dual_contained_in(z1, z2)
    report = {
        "mode": "single",
        "family": spec.label(),
        "s": s,
        "t": t,
        "criterion_containment": predicted,
    }
    c1 = ConstacyclicCode.from_family(spec, t)
    c2 = ConstacyclicCode.from_family(spec, s)
    try:
        observed = hermitian_containment_oracle(c1, c2)
        report["oracle_containment"] = observed
        agree = observed == predicted
    except ValueError as exc:  # splitting field over the cap
        report["oracle_containment"] = None
        report["oracle_note"] = str(exc)
        agree = True
    report["agree"] = agree
    return report, agree


def _crosscheck_sweep(args) -> tuple[dict, bool]:
    qs = (args.q,) if args.q is not None else verify.ORACLE_QS
    q_max = args.q if args.q is not None else args.q_max
    report = {
        "mode": "sweep",
        "containment_lemmas": verify.reprove_containment_lemmas(q_max),
        "oracle_agreement": verify.oracle_agreement_sweep(qs),
        "lemma_oracle": verify.lemma_oracle_sweep(qs),
        "generator_soundness": verify.generator_soundness_sweep(qs),
    }
    ok = all(
        entry["ok"] for key, entry in report.items() if isinstance(entry, dict)
    )
    return report, ok


def cmd_crosscheck(args) -> int:
    if args.construction is not None:
        report, ok = _crosscheck_single(args)
    else:
        if max((args.q,) if args.q is not None else verify.ORACLE_QS) > max(verify.ORACLE_QS):
            raise FamilyConstraintError(
                f"sweep oracles are budgeted for q <= {max(verify.ORACLE_QS)}"
            )
        report, ok = _crosscheck_sweep(args)
    if args.format == "json":
        _write(args, _dump_json(report))
    else:
        lines = []
        for key, entry in report.items():
            if isinstance(entry, dict):
                state = "PASS" if entry["ok"] else "FAIL"
                detail = {
                    k: v for k, v in entry.items()
                    if k not in ("ok",) and not isinstance(v, list)
                }
                failures = [v for k, v in entry.items() if isinstance(v, list) and v]
                lines.append(f"{key}: {state} {detail}")
                for chunk in failures:
                    lines.extend(f"  {item}" for item in chunk)
            else:
                lines.append(f"{key}: {entry}")
        lines.append("PASS" if ok else "FAIL")
        _write(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


COMMANDS = {
    "family": cmd_family,
    "verify-tables": cmd_verify_tables,
    "code-info": cmd_code_info,
    "dual-check": cmd_dual_check,
    "crosscheck": cmd_crosscheck,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except OptimalityError as exc:
        print(f"claim failed: {exc}", file=sys.stderr)
        return 1
    except (FamilyConstraintError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
