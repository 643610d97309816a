"""Decision rules and attribute reduction on formal decision contexts."""

from ._core import (
    Error,
    FormalContext,
    FormalDecisionContext,
    InvalidArgument,
    LimitExceeded,
    ParseError,
    all_rules,
    check_canonical,
    concepts,
    is_consistent,
    load_context,
    necessary_rules,
    parse_context,
    random_fdc,
    reductions,
    run_cli,
    split,
)

__all__ = [
    "Error",
    "FormalContext",
    "FormalDecisionContext",
    "InvalidArgument",
    "LimitExceeded",
    "ParseError",
    "all_rules",
    "check_canonical",
    "concepts",
    "is_consistent",
    "load_context",
    "necessary_rules",
    "parse_context",
    "random_fdc",
    "reductions",
    "run_cli",
    "split",
]
