"""Kempe-equivalence classes of 4-colorings."""

from __future__ import annotations

from .. import kernels
from .coloring import Coloring, nonsingular_coloring
from .graph import PlaneTriangulation

__all__ = ["kempe_closure", "is_akempic_bruteforce"]


def kempe_closure(g: PlaneTriangulation, c: Coloring | None = None, limit: int | None = None) -> frozenset[tuple[int, ...]]:
    """All colorings Kempe-equivalent to ``c``, up to renaming colors.

    Each coloring is normalised so colors appear in order of first use.
    ``limit`` stops the search once that many classes are found.
    """
    if c is None:
        c = nonsingular_coloring(g)
    offsets, nbrs = g.csr()
    start = kernels.canonical_coloring(bytes(c.colors))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for col in frontier:
            for other in kernels.kempe_neighbors(offsets, nbrs, col):
                if other not in seen:
                    seen.add(other)
                    nxt.append(other)
                    if limit is not None and len(seen) >= limit:
                        return frozenset(tuple(s) for s in seen)
        frontier = nxt
    return frozenset(tuple(s) for s in seen)


def is_akempic_bruteforce(g: PlaneTriangulation) -> bool:
    """True when the nonsingular coloring admits no nontrivial Kempe change."""
    return len(kempe_closure(g, limit=2)) == 1
