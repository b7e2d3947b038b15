"""Exact minimal-surface representations via complex quaternions.

Thin wrapper around the compiled extension; all inputs and outputs follow the
same JSON encoding as the ``mincq`` command-line tool, with rationals as
``"num/den"`` strings so exactness survives the language boundary.
"""

from ._mincq import (
    MincqError,
    ParseError,
    UnknownExample,
    convert,
    example_names,
    patch,
    ph_samples,
    phi,
    run_example,
    surface_obj,
    surface_points,
    sylvester_rank,
    verify,
)

__all__ = [
    "MincqError",
    "ParseError",
    "UnknownExample",
    "convert",
    "example_names",
    "patch",
    "ph_samples",
    "phi",
    "run_example",
    "surface_obj",
    "surface_points",
    "sylvester_rank",
    "verify",
]
