"""Real vanishing ideals, augmentation and moment relaxations."""

from ._core import (
    Error,
    InvalidInput,
    ParseError,
    augment,
    base_order,
    check_equality,
    is_real,
    render,
    sdpa,
    solve,
)

__all__ = [
    "Error",
    "InvalidInput",
    "ParseError",
    "augment",
    "base_order",
    "check_equality",
    "is_real",
    "render",
    "sdpa",
    "solve",
]
