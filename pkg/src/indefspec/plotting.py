"""Static SVG figures for the CLI report paths.

Every function renders one matplotlib figure to an SVG file next to the CSV
it illustrates: real spectra against their index, complex eigenvalues with
their accumulation-law predictions and parametric curves, cross-method error
decay, and special-function diagnostics.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def plot_sa_eigs(eigs, gamma: float, bc: str, path: str) -> None:
    """Real eigenvalues lambda_n against n with the gamma^2/4n^2 envelope."""
    ns = [ev.n for ev in eigs]
    lams = [ev.lam for ev in eigs]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(ns, lams, "o", ms=4, label=f"computed ({bc})")
    grid = np.linspace(min(ns), max(ns), 200)
    ax.plot(grid, gamma**2 / (4.0 * grid**2), "-", lw=1, alpha=0.6,
            label=r"$\gamma^2/4n^2$")
    ax.set_xlabel("n")
    ax.set_ylabel(r"$\lambda_n$")
    ax.set_yscale("log")
    ax.set_title(rf"Bound-state energies, $\gamma={gamma:g}$, {bc}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def plot_nsa_eigs(roots, gamma: float, path: str) -> None:
    """Located complex eigenvalues with both predictions and the tau- curve."""
    from .nsa import tau_curve

    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    re = [ev.mu.real for ev in roots]
    im = [ev.mu.imag for ev in roots]
    ax.plot(re, im, "ko", ms=5, label="located zeros of M")
    ax.plot([ev.predicted_D.real for ev in roots],
            [ev.predicted_D.imag for ev in roots],
            "d", ms=6, mfc="none", mec="tab:red", label="Dirichlet prediction")
    ax.plot([ev.predicted_N.real for ev in roots],
            [ev.predicted_N.imag for ev in roots],
            "s", ms=6, mfc="none", mec="tab:blue", label="Neumann prediction")
    if re:
        sgn = 1.0 if re[0] >= 0 else -1.0
        ts = np.linspace(0.5 * min(abs(r) for r in re),
                         1.1 * max(abs(r) for r in re), 300)
        curve = [tau_curve(gamma, "minus", t) for t in ts]
        ax.plot([sgn * c.real for c in curve], [abs(c.imag) for c in curve],
                "-", color="magenta", lw=1, alpha=0.7,
                label=r"$|\mathrm{Im}\,\tau^-|$ curve")
    ax.set_xlabel(r"$\mathrm{Re}\,\mu$")
    ax.set_ylabel(r"$\mathrm{Im}\,\mu$")
    ax.set_title(rf"Complex eigenvalues, $\gamma={gamma:g}$")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def plot_curves(gamma: float, rows, path: str) -> None:
    """Parametric accumulation curves tau-(t), tau+(t) in the complex plane."""
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    ax.plot([r[1] for r in rows], [r[2] for r in rows], "-", color="magenta",
            label=r"$\tau^-(t)$")
    ax.plot([r[3] for r in rows], [r[4] for r in rows], "-", color="tab:blue",
            label=r"$\tau^+(t)$")
    ax.axhline(0.0, color="0.7", lw=0.5)
    ax.axvline(0.0, color="0.7", lw=0.5)
    ax.set_xlabel(r"$\mathrm{Re}\,\tau$")
    ax.set_ylabel(r"$\mathrm{Im}\,\tau$")
    ax.set_title(rf"Eigenvalue accumulation curves, $\gamma={gamma:g}$")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def plot_compare(rows, gamma: float, bc: str, path: str) -> None:
    """Log-log decay of the cross-method relative errors against n."""
    ns = [r["n"] for r in rows]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.loglog(ns, [max(r["rel_err_char_exact"], 1e-18) for r in rows],
              "o-", ms=4, label="characteristic equation vs oracle")
    ax.loglog(ns, [max(r["rel_err_asymptotic"], 1e-18) for r in rows],
              "s-", ms=4, label="two-term asymptotics vs oracle")
    ref = [rows[-1]["rel_err_asymptotic"] * (ns[-1] / n) ** 2 for n in ns]
    ax.loglog(ns, ref, "--", lw=1, alpha=0.6, label=r"$n^{-2}$ reference")
    ax.set_xlabel("n")
    ax.set_ylabel("relative error")
    ax.set_title(rf"Method comparison, $\gamma={gamma:g}$, {bc}")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def plot_nonsym(roots_i, roots_ii, gamma_plus: float, gamma_minus: float,
                path: str) -> None:
    """Upper-half-plane eigenvalues of the two-coupling operator."""
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    ax.plot([m.real for m in roots_i], [m.imag for m in roots_i],
            "o", ms=5, color="tab:red",
            label=rf"$\mathrm{{Re}}\,\mu>0$ ({len(roots_i)} roots)")
    ax.plot([m.real for m in roots_ii], [m.imag for m in roots_ii],
            "o", ms=5, color="tab:blue",
            label=rf"$\mathrm{{Re}}\,\mu<0$ ({len(roots_ii)} roots)")
    ax.axvline(0.0, color="0.7", lw=0.5)
    ax.set_xlabel(r"$\mathrm{Re}\,\mu$")
    ax.set_ylabel(r"$\mathrm{Im}\,\mu$")
    ax.set_title(
        rf"Two-coupling eigenvalues, $\gamma_+={gamma_plus:g}$, "
        rf"$\gamma_-={gamma_minus:g}$"
    )
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def plot_specfun(rows, path: str) -> None:
    """Decay of the uniform-expansion error against the large parameter a."""
    temme = [r for r in rows if r["check"] == "temme_vs_integral"]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for c in sorted({r["c"] for r in temme}):
        sub = [r for r in temme if r["c"] == c]
        ax.loglog([r["a"] for r in sub], [max(r["error"], 1e-18) for r in sub],
                  "o-", ms=4, label=f"c = {c:g}")
    if temme:
        a_vals = sorted({r["a"] for r in temme})
        base = max(r["error"] for r in temme if r["a"] == a_vals[0])
        ax.loglog(a_vals, [base * (a_vals[0] / a) ** 2 for a in a_vals],
                  "--", lw=1, alpha=0.6, label=r"$a^{-2}$ reference")
    ax.set_xlabel("a")
    ax.set_ylabel("relative error")
    ax.set_title("Uniform Kummer expansion vs integral representation")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
