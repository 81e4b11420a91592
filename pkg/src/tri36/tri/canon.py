"""Canonical forms of rotation systems, for isomorphism testing."""

from __future__ import annotations

from .. import kernels
from .graph import PlaneTriangulation

__all__ = ["canonical_form", "canonical_form_hex", "iso_key", "is_isomorphic"]


def canonical_form(g: PlaneTriangulation, reflect: bool = False) -> bytes:
    """Least rotation-respecting BFS code over every starting dart.

    Two triangulations share a form exactly when an orientation-preserving
    isomorphism maps one onto the other.  ``reflect=True`` reads every
    rotation clockwise instead.
    """
    offsets, nbrs = g.csr()
    return kernels.canonical_code(offsets, nbrs, reflect)


def canonical_form_hex(g: PlaneTriangulation, reflect: bool = False) -> str:
    return canonical_form(g, reflect).hex()


def iso_key(g: PlaneTriangulation) -> bytes:
    """Invariant under all isomorphisms, reflections included."""
    return min(canonical_form(g, False), canonical_form(g, True))


def is_isomorphic(g: PlaneTriangulation, h: PlaneTriangulation, orientation_preserving: bool = False) -> bool:
    if g.vertex_count != h.vertex_count:
        return False
    if orientation_preserving:
        return canonical_form(g) == canonical_form(h)
    return iso_key(g) == iso_key(h)
