"""Encoders from (instance, span bound, configuration) to CNF."""

from __future__ import annotations

from typing import Sequence

from ..instance import BcpInstance, Coloring
from .block import block_layout, encode_block, window_terms
from .config import (
    DEFAULT_BLOCK_WIDTH,
    LEGAL,
    METHODS,
    ConfigError,
    EncodingConfig,
    all_configs,
    legality_table,
)
from .order import encode_1g, encode_1l, encode_2g, encode_2l
from .problem import EncodedProblem


class DecodeError(RuntimeError):
    """Model violates the encoding's own structure (an encoder bug)."""


_ORDER = {"1G": encode_1g, "1L": encode_1l, "2G": encode_2g, "2L": encode_2l}


def symmetry_limit(k: int) -> int:
    """Largest color the symmetry-breaking vertex may take under bound ``k``.

    Reflection maps a coloring of span ``k' <= k`` onto itself with
    ``c(h) -> k' + 1 - c(h)``, so one of the two lies in ``[1, ceil(k'/2)]``.
    With odd ``k'`` the middle color is its own mirror, hence ceil, not floor.
    """
    return (k + 1) // 2


def add_symmetry(enc: EncodedProblem) -> EncodedProblem:
    """Restrict the highest-degree vertex to the lower half of ``[1, k]``."""
    inst, k = enc.inst, enc.k
    if inst.n == 0:
        return enc
    limit = symmetry_limit(k)
    if limit >= k:
        return enc
    h = inst.max_degree_vertex()
    f = enc.formula
    method = enc.config.method
    if method == "1G":
        f.pin(-enc.yvars[h][limit + 1])
    elif method == "1L":
        f.pin(enc.yvars[h][limit])
    else:
        for j in range(limit + 1, k + 1):
            f.pin(-enc.xvars[h][j])
    enc.symmetry_vertex = h
    return enc


def encode(inst: BcpInstance, k: int, config: EncodingConfig) -> EncodedProblem:
    """Formula satisfiable iff ``inst`` has a feasible coloring of span <= ``k``."""
    if k < 1:
        raise ValueError(f"span bound must be >= 1, got {k}")
    if config.is_block:
        enc = encode_block(inst, k, config)
    else:
        enc = _ORDER[config.method](inst, k, config)
    if config.symmetry:
        add_symmetry(enc)
    return enc


def assumptions_for_span(enc: EncodedProblem, k: int) -> list[int]:
    """Literals restricting an encoding built for ``enc.k`` to span <= ``k``."""
    mode = enc.config.incremental
    if mode == "none":
        raise ConfigError("configuration is not incremental")
    if not 1 <= k < enc.k:
        raise ValueError(f"restricted span {k} must lie in [1, {enc.k - 1}]")
    n = enc.inst.n
    if mode == "y":
        if enc.config.greater_than:
            return [-enc.yvars[u][k + 1] for u in range(n)]
        return [enc.yvars[u][k] for u in range(n)]
    return [-enc.xvars[u][j] for u in range(n) for j in range(k + 1, enc.k + 1)]


def decode(enc: EncodedProblem, model: Sequence[bool]) -> Coloring:
    """Coloring read off a model of ``enc.formula``."""
    k = enc.k
    colors = []
    method = enc.config.method
    for u in range(enc.inst.n):
        if method in ("1G", "1L"):
            bits = [model[v] for v in enc.yvars[u][1:]]
            if method == "1G":
                c = sum(bits)
                ok = c >= 1 and all(bits[:c]) and not any(bits[c:])
            else:
                c = k + 1 - sum(bits)
                ok = c <= k and all(bits[c - 1:]) and not any(bits[: c - 1])
            if not ok:
                raise DecodeError(f"order variables of vertex {u} are not monotone")
        else:
            c = next((j for j in range(1, k + 1) if model[enc.xvars[u][j]]), 0)
            if not c:
                raise DecodeError(f"vertex {u} has no color in the model")
        colors.append(c)
    return Coloring(tuple(colors))


__all__ = [
    "DEFAULT_BLOCK_WIDTH",
    "LEGAL",
    "METHODS",
    "ConfigError",
    "DecodeError",
    "EncodingConfig",
    "EncodedProblem",
    "add_symmetry",
    "all_configs",
    "assumptions_for_span",
    "block_layout",
    "decode",
    "encode",
    "encode_1g",
    "encode_1l",
    "encode_2g",
    "encode_2l",
    "encode_block",
    "legality_table",
    "symmetry_limit",
    "window_terms",
]
