"""Plane triangulations with every vertex of degree 3 or 6."""

from .errors import ConsistencyError, DomainError, NoNonsingularColoring

__version__ = "0.1.0"

__all__ = ["ConsistencyError", "DomainError", "NoNonsingularColoring", "__version__"]
