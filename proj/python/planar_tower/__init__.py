"""Temperley-Lieb planar algebra tower.

Elements are exact (Laurent polynomials in delta) unless built over a
rational or floating ring. JSON forms match the `pa` command line tool.
"""

from ._core import (
    Element,
    FormatError,
    GradedElement,
    ModeMismatch,
    ParseError,
    PreconditionError,
    Ring,
    Scalar,
    bullet,
    catalan,
    cond_expect,
    dagger,
    dimension,
    dot_action,
    element_c,
    element_d,
    evaluate_tangle,
    include,
    include_to,
    inner_product,
    jones_e,
    multiply,
    op_norm,
    phi,
    psd_sqrt,
    psi,
    rotate,
    sharp,
    star,
    suite_names,
    tau,
    trace_Tr,
    trace_tk,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
