"""Exact rich-line enumeration, polynomial partitioning and hyperplane extraction."""

import json

from ._richlines import (
    CutNotFound,
    DimensionMismatch,
    Error,
    InvariantBreach,
    OracleTooLarge,
    ParseError,
    PreconditionError,
    gen_grid,
    gen_planted_hyperplane,
    gen_planted_hypersurface,
    gen_random,
    hyperplane,
    hypersurface,
    oracle_rich_lines,
    partition,
    read_instance,
    rich_lines,
    verify_json,
)


def verify(points, r, oracle=False):
    """Verification report as a dict."""
    return json.loads(verify_json(points, r, oracle))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
