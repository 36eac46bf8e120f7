"""Precision context: term budget and structural limits.

Works like :func:`decimal.localcontext`: the active context lives in a
:class:`contextvars.ContextVar`, so it is per thread / per task and every
kernel function also accepts an explicit ``ctx``.
"""

import contextlib
import contextvars
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Context:
    term_budget: int = 24
    max_depth: int = 8
    max_height: int = 8

    def __post_init__(self):
        if self.term_budget < 1:
            raise ValueError("term_budget must be positive")
        if self.max_depth < 0 or self.max_height < 0:
            raise ValueError("limits must be non-negative")

    def with_(self, **changes):
        return replace(self, **changes)


DEFAULT_CONTEXT = Context()

_current = contextvars.ContextVar("transcalc_context", default=DEFAULT_CONTEXT)


def getcontext():
    return _current.get()


def resolve(ctx):
    return _current.get() if ctx is None else ctx


@contextlib.contextmanager
def localcontext(ctx=None, **changes):
    """Temporarily install ``ctx`` (or the current one with ``changes``)."""
    new = resolve(ctx)
    if changes:
        new = replace(new, **changes)
    token = _current.set(new)
    try:
        yield new
    finally:
        _current.reset(token)
