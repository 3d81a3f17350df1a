"""Matplotlib renderings of verification reports, written next to the report file."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .pipeline import VerificationReport  # noqa: E402

_COLORS = {"pass": "#2a9d8f", "fail": "#e63946", "skipped": "#adb5bd", "probabilistic": "#f4a261"}


def _stem(report_path: str | Path) -> Path:
    path = Path(report_path)
    return path.with_suffix("") if path.suffix else path


def _checks_figure(report: VerificationReport, out: Path) -> Path:
    checks = report.checks
    fig, ax = plt.subplots(figsize=(8, max(2.5, 0.22 * len(checks) + 1)))
    ys = range(len(checks))
    ax.barh(list(ys), [max(c.duration_ms, 0.5) for c in checks], color=[_COLORS[c.status] for c in checks])
    ax.set_yticks(list(ys))
    ax.set_yticklabels([c.name for c in checks], fontsize=7)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("duration (ms)")
    title = f"{report.kind}: overall {report.overall}"
    if report.n is not None:
        title += f", n={report.n}"
    if report.p is not None:
        title += f", p={report.p}"
    ax.set_title(title)
    handles = [plt.Rectangle((0, 0), 1, 1, color=v) for v in _COLORS.values()]
    ax.legend(handles, list(_COLORS), fontsize=7, loc="lower right")
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out


def _factor_figure(report: VerificationReport, out: Path) -> Path:
    terms = report.data["factor_terms"]
    fig, ax = plt.subplots(figsize=(6, 3))
    ax.bar([str(k) for k in range(1, len(terms) + 1)], terms, color="#457b9d")
    ax.set_yscale("log")
    ax.set_xlabel("non-constant factor det L_i")
    ax.set_ylabel("terms")
    ax.set_title(f"f = prod det L_i, {report.data['section_terms']} terms in the section")
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out


def _ranks_figure(report: VerificationReport, out: Path) -> Path:
    ranks: dict[str, list[int]] = report.data["ranks"]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    for key, vals in ranks.items():
        ax.plot(range(len(vals)), [max(v, 0.5) for v in vals], marker="o", label=f"(n,p)=({key})")
    ax.set_yscale("log")
    ax.set_xlabel("j")
    ax.set_ylabel("l_j")
    ax.set_title("ranks of the degree 0 Frobenius pushforward")
    ax.legend(fontsize=6, ncol=2)
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out


def render_figures(report: VerificationReport, report_path: str | Path) -> list[Path]:
    """PNG files named after the report path; returns the written paths."""
    stem = _stem(report_path)
    written = []
    if report.checks:
        written.append(_checks_figure(report, stem.with_name(stem.name + ".checks.png")))
    if "factor_terms" in report.data:
        written.append(_factor_figure(report, stem.with_name(stem.name + ".factors.png")))
    if report.data.get("ranks"):
        written.append(_ranks_figure(report, stem.with_name(stem.name + ".ranks.png")))
    return written
