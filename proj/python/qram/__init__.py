"""Exact q-series engine: series expansions, identity checks, special values."""

from ._core import (
    check_special,
    convolution,
    divisor_sum,
    expand,
    identities,
    phi_poly,
    ratio_poly,
    run_cli,
    special_values,
    verify,
    verify_all,
)

__all__ = [
    "check_special",
    "convolution",
    "divisor_sum",
    "expand",
    "identities",
    "phi_poly",
    "ratio_poly",
    "run_cli",
    "special_values",
    "verify",
    "verify_all",
]
