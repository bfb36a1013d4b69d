"""Exact cohomology of homogeneous bundles on the Grassmannian of lines G(1,n)."""

from ._core import (
    ParseError,
    ValidationError,
    bott,
    check,
    cohomology,
    dual_weight,
    g_reg,
    is_g_regular,
    rank,
    run,
    tensor_weights,
    weyl_dim,
)

__all__ = [
    "ParseError",
    "ValidationError",
    "bott",
    "check",
    "cohomology",
    "dual_weight",
    "g_reg",
    "is_g_regular",
    "rank",
    "run",
    "tensor_weights",
    "weyl_dim",
]
