"""Hecke operators T_x for PGL2 over dual numbers."""

from ._core import (
    arcsine_ks,
    certify_weil,
    char_poly,
    convolve_t,
    dimension,
    families,
    moment_exact,
    operator_matrix,
    oracle_matrix,
    run_suite,
    spectrum,
    structure_count,
    truncated_measure,
)

__all__ = [
    "arcsine_ks",
    "certify_weil",
    "char_poly",
    "convolve_t",
    "dimension",
    "families",
    "moment_exact",
    "operator_matrix",
    "oracle_matrix",
    "run_suite",
    "spectrum",
    "structure_count",
    "truncated_measure",
]
