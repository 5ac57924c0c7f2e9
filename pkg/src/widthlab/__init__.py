"""Numerical toolkit for uniform-norm widths of convolution classes with square-summable kernels."""

from .psi_seq import (
    ExpPoly, Geometric, Power, PsiSequence, TableWithTail, condition_gauge, eval_psi,
    head_inv_sq_sum, psi_from_json, tail_sq_sum,
)
from .trig_core import (
    ConstantBeta, KernelSpec, ListBeta, PeriodicBeta, TrigPolynomial, beta_from_json,
    eval_kernel, psi_derivative, psi_integral, sup_norm,
)
from .width_bounds import (
    PreconditionError, bounds_report, exact_fourier_deviation, lower_bound, poisson_report,
    upper_bound, weyl_nagy_report,
)
from .verify import VerificationReport, default_suite, deviation_oracle

__all__ = [
    "ExpPoly", "Geometric", "Power", "PsiSequence", "TableWithTail", "condition_gauge", "eval_psi",
    "head_inv_sq_sum", "psi_from_json", "tail_sq_sum",
    "ConstantBeta", "KernelSpec", "ListBeta", "PeriodicBeta", "TrigPolynomial", "beta_from_json",
    "eval_kernel", "psi_derivative", "psi_integral", "sup_norm",
    "PreconditionError", "bounds_report", "exact_fourier_deviation", "lower_bound", "poisson_report",
    "upper_bound", "weyl_nagy_report",
    "VerificationReport", "default_suite", "deviation_oracle",
]
