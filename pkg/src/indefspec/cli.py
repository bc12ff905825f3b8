"""Command-line interface: spectra, curves, and diagnostics as CSV plus SVG.

Subcommands:
    sa-eigs        real bound-state energies of the half-line problem
    nsa-eigs       complex eigenvalues of the indefinite operator
    curves         parametric accumulation curves tau-(t), tau+(t)
    compare        per-index cross-method table against the matrix oracle
    nonsym         eigenvalues of the two-coupling operator
    specfun-check  special-function diagnostics (uniform expansion, Bessel)

Every command writes a deterministic CSV (shortest round-trip float
formatting, fixed row order) and, with --svg, a static figure next to it.
Exit codes: 0 ok, 2 bad arguments, 3 numerical failure, 4 excluded parameter.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys

from .errors import (
    ArgumentError,
    DomainError,
    ExcludedParameterError,
    IndefspecError,
    PoleError,
)

EXIT_OK = 0
EXIT_BAD_ARGS = 2
EXIT_NUMERICAL = 3
EXIT_EXCLUDED = 4

_OUTDIR_ENV = "INDEFSPEC_OUTDIR"


def _fmt(x) -> str:
    # shortest round-trip decimal for floats; plain str otherwise
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _output_path(args, default_name: str) -> str:
    if args.output:
        return args.output
    return os.path.join(os.environ.get(_OUTDIR_ENV, "."), default_name)


def _write_csv(path: str, header: list[str], rows: list[list]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])


def _svg_path(csv_path: str) -> str:
    stem, _ = os.path.splitext(csv_path)
    return stem + ".svg"


def _cmd_sa_eigs(args) -> int:
    from .sa import HalfLineProblem, solve_sa_spectrum

    problem = HalfLineProblem(args.gamma, args.bc)
    eigs = solve_sa_spectrum(problem, args.n_max, args.method)
    path = _output_path(args, "sa-eigs.csv")
    _write_csv(path, ["n", "lambda", "method", "residual"],
               [[ev.n, ev.lam, ev.method, ev.residual] for ev in eigs])
    print(f"wrote {len(eigs)} eigenvalues to {path}")
    if args.svg:
        from .plotting import plot_sa_eigs

        plot_sa_eigs(eigs, args.gamma, args.bc, _svg_path(path))
        print(f"wrote figure to {_svg_path(path)}")
    return EXIT_OK


def _cmd_nsa_eigs(args) -> int:
    from .nsa import locate_complex_eigs

    quadrant = {1: "I", 2: "II"}[args.quadrant]
    roots = locate_complex_eigs(args.gamma, (args.re_min, args.re_max), quadrant)
    path = _output_path(args, "nsa-eigs.csv")
    _write_csv(
        path,
        ["n", "re_mu", "im_mu", "residual",
         "pred_D_re", "pred_D_im", "pred_N_re", "pred_N_im"],
        [[ev.n, ev.mu.real, ev.mu.imag, ev.residual,
          ev.predicted_D.real, ev.predicted_D.imag,
          ev.predicted_N.real, ev.predicted_N.imag] for ev in roots],
    )
    print(f"wrote {len(roots)} complex eigenvalues to {path}")
    if args.svg:
        from .plotting import plot_nsa_eigs

        plot_nsa_eigs(roots, args.gamma, _svg_path(path))
        print(f"wrote figure to {_svg_path(path)}")
    return EXIT_OK


def _cmd_curves(args) -> int:
    from .nsa import tau_curve

    if args.points < 2:
        raise ArgumentError("--points must be at least 2")
    if not 0.0 < args.t_min < args.t_max:
        raise ArgumentError("need 0 < --t-min < --t-max")
    rows = []
    for i in range(args.points):
        t = args.t_min + (args.t_max - args.t_min) * i / (args.points - 1)
        tm = tau_curve(args.gamma, "minus", t)
        tp = tau_curve(args.gamma, "plus", t)
        rows.append([t, tm.real, tm.imag, tp.real, tp.imag])
    path = _output_path(args, "curves.csv")
    _write_csv(path, ["t", "re_tau_minus", "im_tau_minus",
                      "re_tau_plus", "im_tau_plus"], rows)
    print(f"wrote {len(rows)} curve samples to {path}")
    if args.svg:
        from .plotting import plot_curves

        plot_curves(args.gamma, rows, _svg_path(path))
        print(f"wrote figure to {_svg_path(path)}")
    return EXIT_OK


def _cmd_compare(args) -> int:
    from .errors import OutOfRegimeError
    from .sa import HalfLineProblem, lambda_asymptotic, solve_sa_spectrum

    problem = HalfLineProblem(args.gamma, args.bc)
    oracle = {ev.n: ev.lam
              for ev in solve_sa_spectrum(problem, args.n_max, "oracle")}
    exact = {ev.n: ev.lam
             for ev in solve_sa_spectrum(problem, args.n_max, "char_exact")}
    rows = []
    plot_rows = []
    for n in range(1, args.n_max + 1):
        try:
            asym = lambda_asymptotic(problem, n)
            if asym <= 0.0:
                raise OutOfRegimeError("nonpositive asymptotic value")
        except OutOfRegimeError:
            asym = math.nan
        err_exact = abs(exact[n] - oracle[n]) / oracle[n]
        err_asym = (abs(asym - oracle[n]) / oracle[n]
                    if math.isfinite(asym) else math.nan)
        rows.append([n, oracle[n], exact[n], asym, err_exact, err_asym])
        if math.isfinite(err_asym):
            plot_rows.append({"n": n, "rel_err_char_exact": err_exact,
                              "rel_err_asymptotic": err_asym})
    path = _output_path(args, "compare.csv")
    _write_csv(path, ["n", "lambda_oracle", "lambda_char_exact",
                      "lambda_asymptotic", "rel_err_char_exact",
                      "rel_err_asymptotic"], rows)
    print(f"wrote {len(rows)} comparison rows to {path}")
    if args.svg:
        from .plotting import plot_compare

        plot_compare(plot_rows, args.gamma, args.bc, _svg_path(path))
        print(f"wrote figure to {_svg_path(path)}")
    return EXIT_OK


def _cmd_nonsym(args) -> int:
    from .nonsym import AsymPotential, determinant_nonsym, locate_nonsym_eigs

    pot = AsymPotential(args.gamma_plus, args.gamma_minus)
    roots_i = locate_nonsym_eigs(pot, (args.re_min, args.re_max), "I")
    roots_ii = locate_nonsym_eigs(pot, (args.re_min, args.re_max), "II")
    rows = []
    for quad, roots in (("I", roots_i), ("II", roots_ii)):
        for mu in roots:
            rows.append([quad, mu.real, mu.imag,
                         abs(determinant_nonsym(mu, pot))])
    path = _output_path(args, "nonsym.csv")
    _write_csv(path, ["quadrant", "re_mu", "im_mu", "residual"], rows)
    print(f"wrote {len(rows)} eigenvalues to {path} "
          f"({len(roots_i)} right, {len(roots_ii)} left)")
    if args.svg:
        from .plotting import plot_nonsym

        plot_nonsym(roots_i, roots_ii, args.gamma_plus, args.gamma_minus,
                    _svg_path(path))
        print(f"wrote figure to {_svg_path(path)}")
    return EXIT_OK


def _cmd_specfun_check(args) -> int:
    import cmath

    from .nsa import q_of_gamma
    from .specfun import bessel_jy, kummer_u_integral_scaled, kummer_u_temme_scaled

    rows = []
    # uniform expansion against the integral representation, both c branches
    for c in (0, -1):
        for k in range(6):
            a = 10.0 * 2.0**k
            m_t, l_t, _ = kummer_u_temme_scaled(a, c, args.gamma)
            m_e, l_e = kummer_u_integral_scaled(-a, float(c), args.gamma / a)
            rel = abs(m_t * cmath.exp(l_t - l_e) - m_e) / abs(m_e)
            rows.append(["temme_vs_integral", a, float(c), rel])
    # Bessel Wronskian J_{nu+1} Y_nu - J_nu Y_{nu+1} = 2/(pi x)
    for nu in (0, 1, 2):
        worst = 0.0
        for i in range(1, 41):
            x = 0.25 * i
            jn, yn = bessel_jy(nu, x)
            jm, ym = bessel_jy(nu + 1, x)
            wr = jm * yn - jn * ym
            worst = max(worst, abs(wr - 2.0 / (math.pi * x)) * math.pi * x / 2.0)
        rows.append(["bessel_wronskian", float(nu), math.nan, worst])
    # q(gamma) asymptotic anchors
    g_small = 1e-6
    rows.append(["q_small_gamma", g_small, math.nan,
                 abs(q_of_gamma(g_small) * (-math.pi / math.log(g_small)) - 1.0)])
    g_large = 1e4
    approx = 1.0 / (4.0 * math.sqrt(g_large)) - 3.0 * math.cos(
        4.0 * math.sqrt(g_large)) / (512.0 * g_large)
    rows.append(["q_large_gamma", g_large, math.nan,
                 abs(q_of_gamma(g_large) - approx) * math.sqrt(g_large)])
    path = _output_path(args, "specfun-check.csv")
    _write_csv(path, ["check", "parameter", "c", "error"], rows)
    print(f"wrote {len(rows)} diagnostic rows to {path}")
    if args.svg:
        from .plotting import plot_specfun

        plot_rows = [{"check": r[0], "a": r[1], "c": r[2], "error": r[3]}
                     for r in rows if r[0] == "temme_vs_integral"]
        plot_specfun(plot_rows, _svg_path(path))
        print(f"wrote figure to {_svg_path(path)}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indefspec",
        description="Spectra of indefinite Sturm-Liouville operators with "
                    "shifted Coulomb potentials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--output", "-o", default=None,
                       help=f"CSV output path (default: ${_OUTDIR_ENV} or cwd)")
        p.add_argument("--svg", action="store_true",
                       help="also render an SVG figure next to the CSV")

    p = sub.add_parser("sa-eigs", help="real bound-state energies")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--bc", choices=("dirichlet", "neumann"), default="dirichlet")
    p.add_argument("--n-max", type=int, default=30)
    p.add_argument("--method", default="char_exact",
                   choices=("char_exact", "char_reduced", "asymptotic", "oracle"))
    add_common(p)
    p.set_defaults(handler=_cmd_sa_eigs)

    p = sub.add_parser("nsa-eigs", help="complex eigenvalues of the indefinite operator")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--re-min", type=float, required=True)
    p.add_argument("--re-max", type=float, required=True)
    p.add_argument("--quadrant", type=int, choices=(1, 2), default=1)
    add_common(p)
    p.set_defaults(handler=_cmd_nsa_eigs)

    p = sub.add_parser("curves", help="accumulation curves tau-(t), tau+(t)")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--t-min", type=float, default=0.001)
    p.add_argument("--t-max", type=float, default=0.2)
    p.add_argument("--points", type=int, default=200)
    add_common(p)
    p.set_defaults(handler=_cmd_curves)

    p = sub.add_parser("compare", help="cross-method eigenvalue table")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--bc", choices=("dirichlet", "neumann"), default="dirichlet")
    p.add_argument("--n-max", type=int, default=30)
    add_common(p)
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("nonsym", help="two-coupling operator eigenvalues")
    p.add_argument("--gamma-plus", type=float, required=True)
    p.add_argument("--gamma-minus", type=float, required=True)
    p.add_argument("--re-min", type=float, default=0.01)
    p.add_argument("--re-max", type=float, default=0.15)
    add_common(p)
    p.set_defaults(handler=_cmd_nonsym)

    p = sub.add_parser("specfun-check", help="special-function diagnostics")
    p.add_argument("--gamma", type=float, default=2.5)
    add_common(p)
    p.set_defaults(handler=_cmd_specfun_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ArgumentError, DomainError) as exc:
        print(f"error (bad-arguments): {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    except (ExcludedParameterError, PoleError) as exc:
        print(f"error (excluded-parameter): {exc}", file=sys.stderr)
        return EXIT_EXCLUDED
    except IndefspecError as exc:
        print(f"error (numerical-failure): {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
