"""Planar harmonic mappings onto a half plane, their Hadamard
convolutions, and numerical univalency diagnostics."""
from .analysis import (GridSpec, JBoundaryResult, Poly, UnivalencyReport,
                       cohn_reduce, default_grid, eval_B, eval_J, J_boundary,
                       scan_dilatation, univalency_radius,
                       zeros_in_unit_disk)
from .convolution import (ConvolutionSpec, conv_derivatives, conv_dilatation,
                          conv_dilatation_f0, conv_parts_f1, conv_value)
from .errors import (BoundaryDegenerateError, CohnInapplicableError,
                     CriticalPointError, DomainError, HarmconvError,
                     ParameterError, QuadratureError, SingularityError)
from .mappings import (FAMILIES, MappingSpec, dilatation, eval_f, eval_g,
                       eval_g_prime, eval_h, eval_h_prime, make_mapping,
                       singular_points)
from .render import FigureSpec, render_webbing
from .series import (TruncatedSeries, hadamard, series_derivative,
                     series_div, series_eval, shear_series,
                     taylor_of_mapping)
from .special import li2
from .tables import TableRow, compute_row, compute_table

__version__ = "0.1.0"

__all__ = [
    "BoundaryDegenerateError", "CohnInapplicableError", "ConvolutionSpec",
    "CriticalPointError", "DomainError", "FAMILIES", "FigureSpec",
    "GridSpec", "HarmconvError", "JBoundaryResult", "J_boundary",
    "MappingSpec", "ParameterError", "Poly", "QuadratureError",
    "SingularityError", "TableRow", "TruncatedSeries", "UnivalencyReport",
    "cohn_reduce", "compute_row", "compute_table", "conv_derivatives",
    "conv_dilatation", "conv_dilatation_f0", "conv_parts_f1", "conv_value",
    "default_grid", "dilatation", "eval_B", "eval_J", "eval_f", "eval_g",
    "eval_g_prime", "eval_h", "eval_h_prime", "hadamard", "li2",
    "make_mapping", "render_webbing", "scan_dilatation", "series_derivative",
    "series_div", "series_eval", "shear_series", "singular_points",
    "taylor_of_mapping", "univalency_radius", "zeros_in_unit_disk",
    "__version__",
]
