"""Bar chart of per-case time and peak word length for a verification report."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .report import FAIL, INDETERMINATE, VerificationReport  # noqa: E402

_COLORS = {FAIL: "tab:red", INDETERMINATE: "tab:orange"}


def report_figure(report: VerificationReport, path: str) -> str:
    """Two stacked bar panels, one bar per case; failing cases are colored."""
    cases = report.cases
    ids = [c.id for c in cases]
    colors = [_COLORS.get(c.status, "tab:blue") for c in cases]
    width = max(6.0, 0.18 * len(cases))
    fig, (top, bottom) = plt.subplots(2, 1, figsize=(width, 6), sharex=True)
    xs = range(len(cases))
    top.bar(xs, [c.elapsed_ms for c in cases], color=colors)
    top.set_ylabel("time (ms)")
    bottom.bar(xs, [c.peak_len for c in cases], color=colors)
    bottom.set_ylabel("peak word length")
    bottom.set_xticks(list(xs))
    bottom.set_xticklabels(ids, rotation=90, fontsize=6)
    params = " ".join(f"{k}={v}" for k, v in sorted(report.params.items()) if k != "skipped")
    s = report.summary
    top.set_title(f"{report.suite} {params}: {s['pass']} pass, {s['fail']} fail, {s['indeterminate']} indeterminate")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
