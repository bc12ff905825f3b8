"""Spectra of indefinite Sturm-Liouville operators with shifted Coulomb potentials.

The package computes, for the potential -gamma/(1+|x|):

* real bound states of the half-line Schrodinger operator under Dirichlet or
  Neumann boundary conditions (module :mod:`indefspec.sa`),
* complex eigenvalues of the indefinite operator sgn(x)(-d^2/dx^2 - gamma/(1+|x|))
  and their accumulation laws (module :mod:`indefspec.nsa`),
* the two-coupling generalization with different strengths on the half lines
  (module :mod:`indefspec.nonsym`),

backed by special-function machinery (:mod:`indefspec.specfun`,
:mod:`indefspec.theta`) and validated against independent ODE/matrix oracles
(:mod:`indefspec.oracle`).  The CLI entry point is :mod:`indefspec.cli`.
"""

from .errors import IndefspecError
from .nonsym import AsymPotential, f_pm, locate_nonsym_eigs, m_nonsym, upsilon_nonsym
from .nsa import (
    ComplexEigenvalue,
    CurveParams,
    curve_check,
    determinant_m,
    jost_at_zero,
    locate_complex_eigs,
    m_function,
    q_of_gamma,
    symmetry_extend,
    tau_curve,
    upsilon_mp,
)
from .oracle import HalfLineProblem, fd_matrix_eigs, shoot_eigenvalue
from .sa import SAEigenvalue, char_value, lambda_asymptotic, solve_sa_spectrum

__version__ = "0.1.0"

__all__ = [
    "IndefspecError",
    "AsymPotential",
    "f_pm",
    "locate_nonsym_eigs",
    "m_nonsym",
    "upsilon_nonsym",
    "ComplexEigenvalue",
    "CurveParams",
    "curve_check",
    "determinant_m",
    "jost_at_zero",
    "locate_complex_eigs",
    "m_function",
    "q_of_gamma",
    "symmetry_extend",
    "tau_curve",
    "upsilon_mp",
    "HalfLineProblem",
    "fd_matrix_eigs",
    "shoot_eigenvalue",
    "SAEigenvalue",
    "char_value",
    "lambda_asymptotic",
    "solve_sa_spectrum",
    "__version__",
]
