"""Exact iHopf and iquantum group computations (bindings to the C++ core)."""

from ._core import (
    ConfigError,
    ParseError,
    evaluate,
    eval_contexts,
    list_presets,
    preset_info,
    report_json,
    suite_names,
    verify,
)

__all__ = [
    "ConfigError",
    "ParseError",
    "evaluate",
    "eval_contexts",
    "list_presets",
    "preset_info",
    "report_json",
    "suite_names",
    "verify",
]
