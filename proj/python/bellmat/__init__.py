"""Exact toolkit for Bell-type braid matrices.

Thin wrapper over the native module: construction of the (deformed) Bell
matrices, GHZ generation, exact braid / Yang-Baxter / spectral checks,
closed-form unitary evolution, and quadratic relation extraction.
"""

try:
    from . import _core  # installed layout: bellmat/_core*.so
except ImportError:  # build-tree layout: _core next to this package on sys.path
    import _core

__version__ = "0.1.0"

_names = [n for n in dir(_core) if not n.startswith("_")]
globals().update({n: getattr(_core, n) for n in _names})

__all__ = sorted(_names)
