"""Exact crossed-product kernel: PBW normal forms, unimodular rows, stably
free right ideals, and machine-checkable certificates."""

from ._core import (
    Element,
    Presentation,
    check_ordered_like,
    from_text,
    load,
    preset,
    sphere,
    verify_certificate,
)

__all__ = [
    "Element",
    "Presentation",
    "check_ordered_like",
    "from_text",
    "load",
    "preset",
    "sphere",
    "verify_certificate",
]
