"""K-theoretic stable bases of T*(G/B) via the twisted group algebra."""

from .rootdata import RootSystem, WeylElt, WeylGroup, build_root_system

__all__ = ["RootSystem", "WeylElt", "WeylGroup", "build_root_system"]
