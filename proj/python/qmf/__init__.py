"""Exact bases of invariant harmonic polynomial spaces on the Hurwitz order."""

from ._core import (
    basis,
    cm_points,
    congruence_certificate,
    dim_eh_formula,
    dim_via_trace_formula,
    dims,
    divide,
    hecke_coset_count,
    hecke_matrix,
    legendre,
    parity_at_cm,
    theta_character,
    trace_t2_formula,
)

__all__ = [
    "basis",
    "cm_points",
    "congruence_certificate",
    "dim_eh_formula",
    "dim_via_trace_formula",
    "dims",
    "divide",
    "hecke_coset_count",
    "hecke_matrix",
    "legendre",
    "parity_at_cm",
    "theta_character",
    "trace_t2_formula",
]
