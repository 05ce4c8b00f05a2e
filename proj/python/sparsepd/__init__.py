"""Predictive density estimation for sparse Gaussian sequence models.

Thin re-export of the compiled extension module.
"""

try:
    from . import _sparsepd as _ext  # installed wheel: extension inside the package
except ImportError:  # in-tree use: extension on sys.path from the CMake build dir
    import _sparsepd as _ext

__all__ = [name for name in dir(_ext) if not name.startswith("_")]
globals().update({name: getattr(_ext, name) for name in __all__})

__version__ = "0.1.0"
