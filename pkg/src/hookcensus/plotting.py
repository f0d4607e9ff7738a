"""Figure rendering for the report-emitting CLI paths.

Figures are written straight to files (Agg backend); they accompany the
delimited output and never replace it.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)


def save_convergence_figure(rows, path: Path) -> Path:
    """Observed/predicted ratio against n, one line per hook length."""
    by_h: dict[int, list] = {}
    for row in rows:
        if row.ratio is not None:
            by_h.setdefault(row.h, []).append((row.n_or_z, row.ratio))
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for h in sorted(by_h):
        pts = sorted(by_h[h])
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=f"h = {h}")
    ax.axhline(1.0, color="gray", lw=0.8, ls="--")
    ax.set_xlabel("n")
    ax.set_ylabel("observed / predicted")
    ax.set_title("Main-term convergence")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_constants_figure(records, path: Path) -> Path:
    """The two class constants and their ratio against h, with limit lines."""
    from math import log

    hs = [r.h for r in records]
    alphas = [float(r.alpha) for r in records]
    betas = [float(r.beta.value()) for r in records]
    gammas = [float(r.gamma_float) for r in records]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    ax1.plot(hs, alphas, marker="o", label="odd-class constant")
    ax1.plot(hs, betas, marker="s", label="distinct-class constant")
    ax1.axhline(log(2), color="tab:blue", lw=0.8, ls="--")
    ax1.axhline(log(3) / 2, color="tab:orange", lw=0.8, ls="--")
    ax1.set_xlabel("h")
    ax1.legend()
    ax2.plot(hs, gammas, marker="o", color="tab:green", label="ratio")
    ax2.axhline(log(4) / log(3), color="tab:green", lw=0.8, ls="--")
    ax2.set_xlabel("h")
    ax2.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_star_ratio_figure(scan, path: Path) -> Path:
    """Starred-class count ratio over the scanned n values."""
    rows = scan.summary.get("rows", [])
    xs = [r["n"] for r in rows if r["ratio"] is not None]
    ys = [r["ratio"] for r in rows if r["ratio"] is not None]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(xs, ys, marker="o")
    ax.set_xlabel("n")
    ax.set_ylabel("self-conjugate / distinct-odd hook counts")
    ax.set_title(f"Starred ratio trend, h = {scan.scanned.get('h')}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
