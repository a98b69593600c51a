"""Voronoi cells, packing densities and tessellation tetrahedra of sphere packings."""

try:
    from ._packingcell import *  # noqa: F401,F403
    from . import _packingcell as _core
except ImportError:  # plain CMake build: extension sits next to the package
    from _packingcell import *  # noqa: F401,F403
    import _packingcell as _core

__all__ = [name for name in dir(_core) if not name.startswith("_")]
__version__ = "0.1.0"
