"""Exact bandwidth coloring with SAT encodings."""

from .bounds import BoundResult, dsatur_bound
from .encode import EncodedProblem, EncodingConfig, all_configs, decode, encode
from .instance import (
    BcpInstance,
    BmcpInstance,
    Coloring,
    bmcp_to_bcp,
    parse_col,
    read_col,
    reflect,
    validate,
    write_col,
)
from .search import OptimalResult, solve_optimal
from .verify import brute_force_optimal, feasible_at

__all__ = [
    "BcpInstance",
    "BmcpInstance",
    "BoundResult",
    "Coloring",
    "EncodedProblem",
    "EncodingConfig",
    "OptimalResult",
    "all_configs",
    "bmcp_to_bcp",
    "brute_force_optimal",
    "decode",
    "dsatur_bound",
    "encode",
    "feasible_at",
    "parse_col",
    "read_col",
    "reflect",
    "solve_optimal",
    "validate",
    "write_col",
]
