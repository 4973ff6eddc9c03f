from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

METHODS = ("1G", "1L", "2G", "2L", "X", "Xa")

# method -> (width choices, incremental choices)
LEGAL = {
    "1G": ((None,), ("none", "y")),
    "1L": ((None,), ("none", "y")),
    "2G": ((None,), ("none", "x", "y")),
    "2L": ((None,), ("none", "x", "y")),
    "X": (("fixed", "vary"), ("none", "x")),
    "Xa": (("fixed", "vary"), ("none", "x")),
}

DEFAULT_BLOCK_WIDTH = 8


class ConfigError(ValueError):
    pass


def legality_table() -> str:
    rows = ["method  width        incremental  symmetry"]
    for m, (widths, incs) in LEGAL.items():
        w = ",".join(x for x in widths if x) or "-"
        rows.append(f"{m:<7} {w:<12} {','.join(incs):<12} on,off")
    return "\n".join(rows)


@dataclass(frozen=True)
class EncodingConfig:
    """One cell of the configuration matrix.

    ``width`` is ``None`` for the order encodings and ``"fixed"`` or
    ``"vary"`` for the block encodings; ``block_width`` is the fixed width
    (also used for isolated vertices under ``"vary"``).
    """

    method: str
    width: str | None = None
    incremental: str = "none"
    symmetry: bool = False
    block_width: int = DEFAULT_BLOCK_WIDTH

    def __post_init__(self) -> None:
        if self.method not in LEGAL:
            raise ConfigError(f"unknown method {self.method!r}; expected one of {METHODS}")
        widths, incs = LEGAL[self.method]
        if self.method in ("X", "Xa") and self.width is None:
            object.__setattr__(self, "width", "fixed")
        if self.width not in widths:
            raise ConfigError(
                f"width {self.width!r} not allowed for {self.method}\n{legality_table()}"
            )
        if self.incremental not in incs:
            raise ConfigError(
                f"incremental mode {self.incremental!r} not allowed for {self.method}\n"
                f"{legality_table()}"
            )
        if self.block_width < 1:
            raise ConfigError("block width must be >= 1")

    @property
    def is_block(self) -> bool:
        return self.method in ("X", "Xa")

    @property
    def uses_x(self) -> bool:
        return self.method not in ("1G", "1L")

    @property
    def greater_than(self) -> bool:
        return self.method in ("1G", "2G")

    def label(self) -> str:
        parts = [self.method]
        if self.width == "fixed":
            parts.append(f"fixed:{self.block_width}")
        elif self.width:
            parts.append(self.width)
        parts.append(f"inc={self.incremental}")
        parts.append("sym" if self.symmetry else "nosym")
        return "/".join(parts)


def all_configs(block_width: int = DEFAULT_BLOCK_WIDTH) -> Iterator[EncodingConfig]:
    """The 36 legal configurations."""
    for method, (widths, incs) in LEGAL.items():
        for width in widths:
            for inc in incs:
                for sym in (True, False):
                    yield EncodingConfig(method, width, inc, sym, block_width)
