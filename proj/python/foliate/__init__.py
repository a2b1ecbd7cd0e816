"""Exact Gauss map iteration, graded rings and toric criteria for singular foliations."""

from ._foliate import (
    Error,
    ParseError,
    Problem,
    Resolution,
    ResourceError,
    StructuralError,
    base_expansion,
    carrying_identity_holds,
    divisor_X,
    divisor_recurrence_check,
    f_degree,
    gauss_map,
    resolve,
    ring_table,
    run_command,
    section_test,
    toric_resolvable,
    w_form,
)

__all__ = [
    "Error",
    "ParseError",
    "Problem",
    "Resolution",
    "ResourceError",
    "StructuralError",
    "base_expansion",
    "carrying_identity_holds",
    "divisor_X",
    "divisor_recurrence_check",
    "f_degree",
    "gauss_map",
    "resolve",
    "ring_table",
    "run_command",
    "section_test",
    "toric_resolvable",
    "w_form",
]
