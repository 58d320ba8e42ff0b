"""Safe catch/throw terms, coroutine machines and their lock-step simulations."""

from ._corovm import (
    ParseError,
    ScopeError,
    TranslationError,
    bisim,
    check,
    compile,
    generate,
    lift,
    parse,
    run,
    to_indexed,
)

__all__ = [
    "ParseError",
    "ScopeError",
    "TranslationError",
    "bisim",
    "check",
    "compile",
    "generate",
    "lift",
    "parse",
    "run",
    "to_indexed",
]
