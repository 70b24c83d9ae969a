"""Verification suites and character tables for the toroidal Weyl module."""

import json

from ._toroidal import (
    InvalidArgument,
    Model,
    NotSimplyLaced,
    SliceExhausted,
    WindowMismatch,
    char_table,
    elementary,
    garland_coeff,
    suite_names,
)
from ._toroidal import verify as _verify

__all__ = [
    "InvalidArgument",
    "Model",
    "NotSimplyLaced",
    "SliceExhausted",
    "WindowMismatch",
    "char_table",
    "char_series",
    "elementary",
    "garland_coeff",
    "suite_names",
    "verify",
]


def verify(model, suite, **kwargs):
    """Run a suite; one dict per check."""
    text = _verify(model, suite, **kwargs)
    return [json.loads(line) for line in text.splitlines() if line]


def char_series(model, which, order=6, window=2):
    """Character table as parsed JSON."""
    return json.loads(char_table(model, which, order=order, window=window, format="json"))
