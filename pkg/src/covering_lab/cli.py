"""Command-line surface.

Subcommands:

* ``verify-paper``  - run the named constructions and the exhaustive boundary
  searches, print a claim-by-claim scorecard, optionally render file reports;
* ``cover check``   - verify one covering candidate (star or star2);
* ``search``        - decide star2-coverability for S_n or A_n;
* ``split-classes`` - the split/non-split table for the classes of A_n;
* ``fw``            - Frobenius-Wielandt triple checking and searching.

Exit codes: 0 success/verified, 1 negative verdict where a positive was
requested, 2 usage errors.  JSON output is byte-identical across identical
invocations (wall-clock timings appear only in the human-readable text).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from covering_lab.perms import PermError
from covering_lab.groups import GroupError, PermGroup
from covering_lab.conjugacy import (
    Ambient,
    alternating,
    class_table,
    splits_in_alternating,
    symmetric,
)
from covering_lab.covering import (
    KIND_STAR,
    KIND_STAR2,
    CoveringError,
    CoveringReport,
    check_star,
    check_star_star,
)
from covering_lab.constructions import gallery
from covering_lab.fw import FwPreconditionError, FwWitness, fw_kernel, fw_search, is_fw
from covering_lab.recipes import RecipeError, group_from_recipe, group_to_recipe
from covering_lab.report import (
    STATUS_ASSUMED,
    STATUS_FAILED,
    STATUS_VERIFIED,
    ScorecardRow,
    render_report_dir,
)
from covering_lab.search import (
    ASSUMED,
    EXACTLY_ONE,
    NEITHER,
    SOURCE_AUTO,
    SOURCE_CATALOG,
    SOURCE_LATTICE,
    SearchError,
    SearchVerdict,
    decide_star_star,
    default_jobs,
    transitivity_report,
)

SCHEMA_VERSION = 1

USAGE_ERRORS = (RecipeError, PermError, GroupError, CoveringError, SearchError, ValueError)


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _natural_ambient(g: PermGroup) -> Ambient:
    if g.is_natural_symmetric:
        return symmetric(g.degree)
    if g.is_natural_alternating and g.degree >= 3:
        return alternating(g.degree)
    raise CoveringError(
        "class-level checks need a natural symmetric or alternating ambient group"
    )


def _report_json(report: CoveringReport) -> dict:
    classes = None
    if report.coverage is not None:
        classes = [
            {
                "type": str(row.cid.ctype),
                "split": row.cid.split,
                "coveredBy": row.covered_by,
                "witness": row.witness.cycle_string() if row.witness else None,
            }
            for row in report.coverage
        ]
    return {
        "schemaVersion": SCHEMA_VERSION,
        "ambient": report.ambient_name,
        "kind": report.kind,
        "verdict": report.verdict,
        "classes": classes,
        "inclusionCheck": report.inclusion_ok,
    }


def _print_report_text(report: CoveringReport) -> None:
    comp = ", ".join(f"{lab} (order {g.order()})" for lab, g in report.components)
    print(f"ambient   {report.ambient_name}")
    print(f"kind      {report.kind}")
    print(f"components: {comp}")
    print(f"verdict   {'covering' if report.verdict else 'NOT a covering'}")
    if report.coverage is not None:
        print(f"{'class':>14s}  {'covered by':<14s} witness")
        for row in report.coverage:
            wit = row.witness.cycle_string() if row.witness else "-"
            print(f"{row.cid.label():>14s}  {row.covered_by:<14s} {wit}")
    if not report.verdict and report.uncovered_element is not None:
        print(f"uncovered element: {report.uncovered_element.cycle_string()}")
    if report.inclusion_ok is not None:
        print(f"no-inclusion check: {'ok' if report.inclusion_ok else 'VIOLATED'}")
    if report.core_component is not None:
        print(
            f"normalized family with the normal core of K (order "
            f"{report.core_component.order()}): "
            f"{'still a covering' if report.core_verdict else 'BROKEN'}"
        )


# ---------------------------------------------------------------------------
# verify-paper


_POSITIVE_BOUNDARY = [("S", n) for n in range(3, 7)] + [("A", n) for n in range(4, 9)]
_NEGATIVE_BOUNDARY = [
    ("S", 7, SOURCE_LATTICE),
    ("S", 7, SOURCE_CATALOG),
    ("S", 8, SOURCE_CATALOG),
    ("A", 9, SOURCE_CATALOG),
]


def _cmd_verify_paper(args) -> int:
    rows: list[ScorecardRow] = []
    coverage: list[tuple[str, CoveringReport]] = []
    verdicts: list[SearchVerdict] = []
    witnesses: list[tuple[int, CoveringReport]] = []

    if args.only in ("all", "gallery"):
        for entry in gallery():
            t0 = time.perf_counter()
            report = entry.verify()
            dt = time.perf_counter() - t0
            status = STATUS_VERIFIED if report.verdict else STATUS_FAILED
            rows.append(ScorecardRow(entry.label, entry.summary, status, dt))
            coverage.append((entry.label, report))
            if entry.kind == KIND_STAR2 and report.verdict and report.ambient is not None:
                witnesses.append((report.ambient.degree, report))

    if args.only in ("all", "searches"):
        s7_verdicts = {}
        for kind, n in _POSITIVE_BOUNDARY:
            ambient = symmetric(n) if kind == "S" else alternating(n)
            t0 = time.perf_counter()
            v = decide_star_star(ambient, jobs=args.jobs)
            dt = time.perf_counter() - t0
            status = STATUS_VERIFIED if v.coverable else STATUS_FAILED
            rows.append(
                ScorecardRow(
                    f"coverable/{ambient.name}",
                    f"{ambient.name} is star2-coverable (witness pair found)",
                    status,
                    dt,
                )
            )
            if v.coverable:
                verdicts.append(v)
                witnesses.append((n, v.report))
        for kind, n, source in _NEGATIVE_BOUNDARY:
            ambient = symmetric(n) if kind == "S" else alternating(n)
            t0 = time.perf_counter()
            v = decide_star_star(ambient, source=source, jobs=args.jobs)
            dt = time.perf_counter() - t0
            if v.coverable:
                status = STATUS_FAILED
            else:
                status = STATUS_ASSUMED if v.completeness == ASSUMED else STATUS_VERIFIED
            rows.append(
                ScorecardRow(
                    f"not-coverable/{ambient.name}/{source}",
                    f"{ambient.name} admits no star2 covering ({source} candidates)",
                    status,
                    dt,
                )
            )
            verdicts.append(v)
            if kind == "S" and n == 7:
                s7_verdicts[source] = v.coverable
        if len(s7_verdicts) == 2:
            agree = s7_verdicts[SOURCE_LATTICE] == s7_verdicts[SOURCE_CATALOG]
            rows.append(
                ScorecardRow(
                    "cross-check/S7",
                    "S7 lattice and catalog verdicts agree",
                    STATUS_VERIFIED if agree else STATUS_FAILED,
                )
            )

    if witnesses:
        ok = True
        for n, report in witnesses:
            pattern = transitivity_report(report.component("H"), report.component("K"))
            if n >= 7 and pattern != EXACTLY_ONE:
                ok = False
            if n >= 5 and pattern == NEITHER:
                ok = False
        rows.append(
            ScorecardRow(
                "transitivity-pattern",
                "every found covering pair has a transitive component for n >= 5, "
                "exactly one for n >= 7",
                STATUS_VERIFIED if ok else STATUS_FAILED,
            )
        )

    all_ok = all(r.status != STATUS_FAILED for r in rows)
    if args.report:
        written = render_report_dir(Path(args.report), rows, coverage, verdicts)
        if not args.json:
            for p in written:
                print(f"wrote {p}", file=sys.stderr)
    if args.json:
        _emit_json(
            {
                "schemaVersion": SCHEMA_VERSION,
                "command": "verify-paper",
                "rows": [
                    {"label": r.label, "statement": r.statement, "status": r.status}
                    for r in rows
                ],
                "allVerified": all_ok,
            }
        )
    else:
        width = max(len(r.label) for r in rows) if rows else 10
        for r in rows:
            print(f"{r.label:<{width}s}  {r.status:<26s} {r.runtime_s:7.2f}s  {r.statement}")
        print(f"{'ALL VERIFIED' if all_ok else 'FAILURES PRESENT'}")
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# cover check


def _cmd_cover_check(args) -> int:
    _, group = group_from_recipe(args.group)
    _, h = group_from_recipe(args.H)
    _, k = group_from_recipe(args.K)
    if args.kind == KIND_STAR2:
        report = check_star_star(_natural_ambient(group), h, k)
    else:
        report = check_star(group, h, k)
    if args.json:
        _emit_json(_report_json(report))
    else:
        _print_report_text(report)
    return 0 if report.verdict else 1


# ---------------------------------------------------------------------------
# search


def _cmd_search(args) -> int:
    ambient = (symmetric if args.ambient == "Sn" else alternating)(args.n)
    verdict = decide_star_star(
        ambient, source=args.source, jobs=args.jobs, catalog_path=args.catalog
    )
    if args.json:
        payload = {
            "schemaVersion": SCHEMA_VERSION,
            "ambient": ambient.name,
            "n": args.n,
            "source": verdict.source,
            "completeness": verdict.completeness,
            "coverable": verdict.coverable,
            "classes": verdict.class_labels,
            "witness": list(verdict.witness) if verdict.witness else None,
            "certificate": [
                {
                    "H": pc.h_label,
                    "K": pc.k_label,
                    "uncovered": [c.label() for c in pc.uncovered],
                }
                for pc in verdict.certificate
            ],
        }
        _emit_json(payload)
    else:
        print(f"ambient      {ambient.name}")
        print(f"source       {verdict.source} ({verdict.completeness})")
        print(f"candidates   {', '.join(verdict.class_labels)}")
        if verdict.coverable:
            h, k = verdict.witness
            pattern = transitivity_report(
                verdict.report.component("H"), verdict.report.component("K")
            )
            print(f"coverable    yes: {{{h}^g, {k}^g}} ({pattern})")
        else:
            print("coverable    no; exhaustion certificate:")
            for pc in verdict.certificate:
                missing = " ".join(c.label() for c in pc.uncovered)
                print(f"  {pc.h_label} + {pc.k_label}: uncovered {missing}")
    return 0


# ---------------------------------------------------------------------------
# split-classes


def _cmd_split_classes(args) -> int:
    n = args.n
    table = class_table(alternating(n))
    rows = []
    seen = set()
    for entry in table:
        key = entry.cid.parts
        if key in seen:
            continue
        seen.add(key)
        t = entry.cid.ctype
        if splits_in_alternating(t):
            half = entry.size
            rows.append({"type": str(t), "splits": True, "classSizes": [half, half]})
        else:
            rows.append({"type": str(t), "splits": False, "classSizes": [entry.size]})
    if args.json:
        _emit_json({"schemaVersion": SCHEMA_VERSION, "degree": n, "rows": rows})
    else:
        print(f"{'type':>16s}  {'splits':<7s} class sizes in A{n}")
        for row in rows:
            sizes = " + ".join(str(s) for s in row["classSizes"])
            print(f"{row['type']:>16s}  {'yes' if row['splits'] else 'no':<7s} {sizes}")
    return 0


# ---------------------------------------------------------------------------
# fw


def _witness_json(witness: FwWitness) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "group": group_to_recipe("G", witness.group),
        "complement": group_to_recipe("H", witness.complement),
        "complementNormal": group_to_recipe("N", witness.complement_normal),
        "kernel": group_to_recipe("K", witness.kernel),
        "checks": witness.checks,
        "ok": witness.ok,
    }


def _print_witness(witness: FwWitness) -> None:
    print(f"G order {witness.group.order()}, H order {witness.complement.order()}, "
          f"N order {witness.complement_normal.order()}")
    print(f"kernel order {witness.kernel.order()}: "
          f"{' '.join(p.cycle_string() for p in witness.kernel.generators) or '()'}")
    for name, ok in witness.checks.items():
        print(f"  {name}: {'ok' if ok else 'FAILED'}")


def _cmd_fw_check(args) -> int:
    _, group = group_from_recipe(args.group)
    _, h = group_from_recipe(args.H)
    _, n = group_from_recipe(args.N)
    try:
        verdict = is_fw(group, h, n)
    except FwPreconditionError as exc:
        print(f"precondition: {exc.reason}", file=sys.stderr)
        return 2
    if verdict:
        witness = fw_kernel(group, h, n)
        if args.json:
            _emit_json(_witness_json(witness))
        else:
            _print_witness(witness)
        return 0
    if args.json:
        _emit_json({"schemaVersion": SCHEMA_VERSION, "isFw": False})
    else:
        print("the intersection condition fails: not a Frobenius-Wielandt triple")
    return 1


def _cmd_fw_search(args) -> int:
    _, group = group_from_recipe(args.group)
    witness = fw_search(group)
    if witness is None:
        if args.json:
            _emit_json({"schemaVersion": SCHEMA_VERSION, "found": False})
        else:
            print("no Frobenius-Wielandt triple exists: not star-coverable")
        return 1
    if args.json:
        payload = _witness_json(witness)
        payload["found"] = True
        _emit_json(payload)
    else:
        _print_witness(witness)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covering-lab",
        description="conjugate coverings of symmetric and alternating groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-paper", help="run the full verification scorecard")
    p.add_argument("--only", choices=["all", "gallery", "searches"], default="all")
    p.add_argument("--json", action="store_true")
    p.add_argument("--report", metavar="DIR", help="write CSV and figure reports here")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=_cmd_verify_paper)

    p = sub.add_parser("cover", help="covering checks")
    cover_sub = p.add_subparsers(dest="action", required=True)
    pc = cover_sub.add_parser("check", help="verify one covering candidate")
    pc.add_argument("--group", required=True, help="ambient group recipe")
    pc.add_argument("--H", required=True, help="first component recipe")
    pc.add_argument("--K", required=True, help="second component recipe")
    pc.add_argument("--kind", choices=[KIND_STAR, KIND_STAR2], default=KIND_STAR2)
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=_cmd_cover_check)

    p = sub.add_parser("search", help="decide star2-coverability")
    p.add_argument("--ambient", choices=["Sn", "An"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--source", choices=[SOURCE_LATTICE, SOURCE_CATALOG, SOURCE_AUTO], default=SOURCE_AUTO
    )
    p.add_argument(
        "--catalog",
        metavar="FILE",
        help="user catalog: JSON list of {label, generators, expectedOrder, provenanceNote}",
    )
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("split-classes", help="split/non-split table for A_n classes")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_split_classes)

    p = sub.add_parser("fw", help="Frobenius-Wielandt triples")
    fw_sub = p.add_subparsers(dest="action", required=True)
    pf = fw_sub.add_parser("check", help="verify a candidate triple (G, H, N)")
    pf.add_argument("--group", required=True)
    pf.add_argument("--H", required=True)
    pf.add_argument("--N", required=True)
    pf.add_argument("--json", action="store_true")
    pf.set_defaults(func=_cmd_fw_check)
    ps = fw_sub.add_parser("search", help="search (H, N) pairs in a group")
    ps.add_argument("--group", required=True)
    ps.add_argument("--json", action="store_true")
    ps.set_defaults(func=_cmd_fw_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", None) is None and hasattr(args, "jobs"):
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except FwPreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
