"""Python bindings for the nullgb C++ core.

Grids are given as JSON text or plain dicts, e.g. ``{"S": [[0, 1], [0, 1]]}``;
polynomials as ``Poly`` objects or strings such as ``"x1^2 - x1"``.
Membership calls return ``"true"``, ``"false"`` or ``"inapplicable"``.
"""

from ._core import (
    NullgbError,
    Poly,
    alon_furedi,
    certificate,
    count_grid_complement,
    count_punctured_complement,
    is_groebner,
    jamison_bound,
    membership,
    min_blocking_multiset,
    min_extra_degree,
    mixed_membership,
    normal_form,
    punctured_analysis,
    punctured_membership,
    reduce,
    run_cli,
    verify_certificate,
)

__all__ = [
    "NullgbError",
    "Poly",
    "alon_furedi",
    "certificate",
    "count_grid_complement",
    "count_punctured_complement",
    "is_groebner",
    "jamison_bound",
    "membership",
    "min_blocking_multiset",
    "min_extra_degree",
    "mixed_membership",
    "normal_form",
    "punctured_analysis",
    "punctured_membership",
    "reduce",
    "run_cli",
    "verify_certificate",
]
