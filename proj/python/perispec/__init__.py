"""Python access to the perispec core: model spectra, circle Dirac
discretizations, symbol-level Fredholm analysis and exact invariants.

Exact values come back as :class:`fractions.Fraction`.
"""

from fractions import Fraction

from . import _core
from ._core import (
    ContractViolation,
    DomainError,
    InputError,
    LaurentSymbol,
    ParseError,
    circle_dirac,
    circle_spectrum,
    convention_block,
    direct_sum,
    finite_section,
    form_matrix,
    form_signature,
    fourier_laplace,
    fredholm_via_sections,
    hermitian_eigenvalues,
    is_fredholm,
    matrix_signature,
    min_singular_on_circle,
    numeric_kernel_dim,
    singular_values,
    spectral_flow,
    sphere_spectrum,
    toeplitz_index,
    twist_to_z,
    winding_number,
)

__version__ = "0.1.0"


def _mod2(d):
    return Fraction(d["value"]), Fraction(d["mod2"])


def rohlin(sig_w, strict=False):
    """(sig_w/8, its residue in [0, 2))."""
    return _mod2(_core.rohlin(sig_w, strict))


def beta(rho, sig_v, strict=False):
    """(rho − sig_v/16, its residue in [0, 2)); rho may be int, str or Fraction."""
    return _mod2(_core.beta(str(Fraction(rho)), sig_v, strict))


def w_invariant(ind_plus, sig_w):
    return Fraction(_core.w_invariant(ind_plus, sig_w))


def w_cs(ind_plus, sig_w, sig_v):
    return Fraction(_core.w_cs(ind_plus, sig_w, sig_v))


def alpha_n(n, **data):
    """(group, value) with group one of "Z", "Z/2", "0"."""
    return _core.alpha_n(n, **data)


def run_problem(text, command):
    """Parse problem-file text, run a command on it and return the report as a dict."""
    import json

    return json.loads(_core.run_problem(text, command))


__all__ = [name for name in dir() if not name.startswith("_") and name not in {"Fraction", "json"}]
