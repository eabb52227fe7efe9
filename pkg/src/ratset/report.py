"""Figure rendering for census tables and enumeration reports.

Plots accompany the delimited text output of the CLI report paths; they are
written straight to files with the Agg backend, never shown interactively.
"""

from __future__ import annotations


def _figure():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def save_density_plot(rows, path, title="words per length"):
    """Bar chart of (length, count) rows."""
    plt = _figure()
    ns = [n for n, _ in rows]
    cs = [c for _, c in rows]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(ns, cs, color="#4878d0")
    ax.set_xlabel("word length")
    ax.set_ylabel("count")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_report_plot(report, path, title="accepted words and distinct values"):
    """Per-length accepted word counts with the distinct-value total inset."""
    plt = _figure()
    lengths = list(range(len(report.words_per_length)))
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(lengths, report.words_per_length, color="#4878d0",
           label="accepted words")
    ax.set_xlabel("word length")
    ax.set_ylabel("count")
    ax.set_title(title)
    ax.annotate(f"{len(report.counts)} distinct values",
                xy=(0.98, 0.92), xycoords="axes fraction", ha="right")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
