"""File reports: delimited scorecards/certificates plus coverage figures.

Everything here is optional output for the CLI's ``--report DIR`` path; the
figures show, per construction, which component covers each conjugacy class,
and for negative searches which classes defeat each candidate pair.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from covering_lab.covering import BY_H, BY_K, CoveringReport
from covering_lab.search import SearchVerdict

STATUS_VERIFIED = "verified"
STATUS_ASSUMED = "verified-catalog-assumed"
STATUS_FAILED = "failed"


@dataclass
class ScorecardRow:
    label: str
    statement: str
    status: str
    runtime_s: float = 0.0


def write_scorecard_csv(rows: list[ScorecardRow], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["label", "statement", "status"])
        for row in rows:
            writer.writerow([row.label, row.statement, row.status])


def write_certificate_csv(verdict: SearchVerdict, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["H", "K", "uncovered-classes"])
        for pc in verdict.certificate:
            writer.writerow([pc.h_label, pc.k_label, " ".join(c.label() for c in pc.uncovered)])


_COVER_COLORS = {BY_H: 0.9, BY_K: 0.5, "uncovered": 0.0}


def coverage_figure(label: str, report: CoveringReport, path: Path) -> None:
    """One-row strip: which component covers each ambient class."""
    if report.coverage is None:
        return
    rows = report.coverage
    values = np.array([[_COVER_COLORS.get(r.covered_by, 0.0) for r in rows]])
    fig, ax = plt.subplots(figsize=(max(4.0, 0.55 * len(rows)), 1.8))
    ax.imshow(values, cmap="viridis", vmin=0.0, vmax=1.0, aspect="auto")
    ax.set_xticks(range(len(rows)))
    ax.set_xticklabels([r.cid.label() for r in rows], rotation=60, ha="right", fontsize=7)
    ax.set_yticks([0])
    ax.set_yticklabels([label], fontsize=8)
    ax.set_title(f"{label}: class coverage (light = H, mid = K, dark = uncovered)", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def certificate_figure(verdict: SearchVerdict, path: Path) -> None:
    """Pairs-by-classes matrix marking the classes each failing pair misses."""
    if not verdict.certificate:
        return
    from covering_lab.conjugacy import class_table

    classes = class_table(verdict.ambient).class_ids()
    col = {c: i for i, c in enumerate(classes)}
    mat = np.zeros((len(verdict.certificate), len(classes)))
    labels = []
    for r, pc in enumerate(verdict.certificate):
        labels.append(f"{pc.h_label} + {pc.k_label}")
        for c in pc.uncovered:
            mat[r, col[c]] = 1.0
    fig, ax = plt.subplots(
        figsize=(max(4.0, 0.45 * len(classes)), max(2.0, 0.28 * len(labels)))
    )
    ax.imshow(mat, cmap="Reds", vmin=0.0, vmax=1.0, aspect="auto")
    ax.set_xticks(range(len(classes)))
    ax.set_xticklabels([c.label() for c in classes], rotation=60, ha="right", fontsize=6)
    ax.set_yticks(range(len(labels)))
    ax.set_yticklabels(labels, fontsize=6)
    ax.set_title(
        f"{verdict.ambient.name}: uncovered classes per maximal pair ({verdict.source})",
        fontsize=8,
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_report_dir(
    outdir: Path,
    rows: list[ScorecardRow],
    coverage: list[tuple[str, CoveringReport]],
    verdicts: list[SearchVerdict],
) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    path = outdir / "scorecard.csv"
    write_scorecard_csv(rows, path)
    written.append(path)

    for label, report in coverage:
        safe = label.replace("/", "_")
        path = outdir / f"coverage_{safe}.png"
        coverage_figure(label, report, path)
        written.append(path)

    for verdict in verdicts:
        base = f"search_{verdict.ambient.name}_{verdict.source}"
        path = outdir / f"{base}.csv"
        write_certificate_csv(verdict, path)
        written.append(path)
        if verdict.certificate:
            fig_path = outdir / f"{base}.png"
            certificate_figure(verdict, fig_path)
            written.append(fig_path)
    return written
