"""
API Stability Labels
====================

Public functions of clawfree carry a stability label, attached to the
function object and readable at runtime. ``labeled_api()`` lists every
labeled function of the package; STABILITY.md tracks the same list.

Usage:
    >>> from clawfree.stability import get_stability, labeled_api
    >>> from clawfree.structure import classify
    >>> get_stability(classify)
    'stable'
    >>> labeled_api()["clawfree.decompose.decompose"]
    'beta'

Levels:
    stable      result semantics locked
    beta        usable, output format may change with 1-release warning
"""

import functools
import importlib
from enum import Enum
from typing import Callable, Dict


class Stability(str, Enum):
    STABLE = "stable"
    BETA = "beta"
    UNKNOWN = "unknown"


# modules scanned by labeled_api(), in dependency order
_MODULES = (
    "graph", "embedding", "formats", "structure", "edge_graph",
    "homogeneous", "decompose", "incidence", "harness",
)


def _label(level: Stability, **attrs) -> Callable:
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            return func(*args, **kwargs)
        wrapper._stability = level.value
        for key, value in attrs.items():
            setattr(wrapper, f"_stability_{key}", value)
        return wrapper
    return decorator


# ── Decorators ───────────────────────────────────────────────────────

def stable(fn=None, *, since: str = None):
    """Mark an API as stable.

    Args:
        since: Release in which the result semantics were locked
    """
    decorator = _label(Stability.STABLE, since=since)
    return decorator(fn) if fn is not None else decorator


def beta(fn=None, *, note: str = None):
    """Mark an API as beta; ``note`` says what may still change."""
    decorator = _label(Stability.BETA, note=note)
    return decorator(fn) if fn is not None else decorator


# ── Introspection ────────────────────────────────────────────────────

def get_stability(obj) -> str:
    return getattr(obj, "_stability", Stability.UNKNOWN.value)


def is_stable(obj) -> bool:
    return get_stability(obj) == Stability.STABLE.value


def labeled_api() -> Dict[str, str]:
    """Dotted name -> label for every labeled function defined in clawfree."""
    found: Dict[str, str] = {}
    for name in _MODULES:
        module = importlib.import_module(f"{__package__}.{name}")
        for attr, obj in vars(module).items():
            if not callable(obj) or getattr(obj, "__module__", None) != module.__name__:
                continue
            label = get_stability(obj)
            if label != Stability.UNKNOWN.value:
                found[f"{module.__name__}.{attr}"] = label
    return found
