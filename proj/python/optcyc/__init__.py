"""Optimal three-weight cyclic codes C(1,q+1,q^2) over F_q and their duals."""

from ._core import (
    OptcycError,
    a4_dual,
    a5_dual,
    decode,
    dual_distribution,
    enumerator,
    field_info,
    griesmer_bound,
    primal_distribution,
    run_cli,
    trace_word,
    verify,
)

__all__ = [
    "OptcycError",
    "a4_dual",
    "a5_dual",
    "decode",
    "dual_distribution",
    "enumerator",
    "field_info",
    "griesmer_bound",
    "primal_distribution",
    "run_cli",
    "trace_word",
    "verify",
]

__version__ = "0.1.0"
