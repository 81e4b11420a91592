"""Nonsingular 4-colorings and the induced three-way edge classification."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..errors import ConsistencyError, DomainError, NoNonsingularColoring
from .graph import PlaneTriangulation

__all__ = [
    "Coloring",
    "EdgeClassification",
    "nonsingular_coloring",
    "classify_edges",
    "default_anchor",
]


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def is_proper(self, g: PlaneTriangulation) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())

    def is_nonsingular(self, g: PlaneTriangulation) -> bool:
        """Proper, and the two vertices opposite every edge differ."""
        if not self.is_proper(g):
            return False
        for u, v in g.edges():
            if self.colors[g.succ(u, v)] == self.colors[g.pred(u, v)]:
                return False
        return True


def nonsingular_coloring(g: PlaneTriangulation, seed: tuple[int, int] | None = None) -> Coloring:
    """The unique nonsingular coloring, up to renaming colors.

    The face left of dart ``seed`` (default: the first dart of vertex 0) is
    colored 0, 1, 2; every neighbouring face then forces its third vertex
    to the color missing from the shared edge and the opposite vertex.
    """
    if seed is None:
        seed = (0, g.rotation[0][0])
    a, b = seed
    if not g.adjacent(a, b):
        raise DomainError(f"seed {seed} is not an edge")
    c = g.succ(a, b)
    colors = [-1] * g.vertex_count
    colors[a], colors[b], colors[c] = 0, 1, 2
    queue = deque([(a, b, c)])
    # faces are keyed by any one of their darts; mark all three
    done = {(a, b), (b, c), (c, a)}
    while queue:
        tri = queue.popleft()
        for x, y, z in (tri, tri[1:] + tri[:1], tri[2:] + tri[:2]):
            # face across x-y (opposite z)
            w = g.pred(x, y)
            forced = 6 - colors[x] - colors[y] - colors[z]
            if colors[w] < 0:
                colors[w] = forced
            elif colors[w] != forced:
                raise NoNonsingularColoring(
                    f"coloring conflict at vertex {w}: needs {forced}, has {colors[w]}"
                )
            if (y, x) not in done:
                done.update({(y, x), (x, w), (w, y)})
                queue.append((y, x, w))
    col = Coloring(tuple(colors))
    if -1 in colors or not col.is_nonsingular(g):
        raise NoNonsingularColoring("propagation did not produce a nonsingular coloring")
    return col


def default_anchor(g: PlaneTriangulation) -> int:
    deg3 = g.degree3_vertices()
    if not deg3:
        raise DomainError("triangulation has no vertex of degree 3")
    return deg3[0]


@dataclass(frozen=True)
class EdgeClassification:
    """Class in Z_3 of every edge, anchored at a degree-3 vertex.

    ``anchor_edges[q]`` is the far end of the class-``q`` edge at the anchor;
    the three are in counter-clockwise order.
    """

    cls: dict[tuple[int, int], int]
    anchor: int
    anchor_edges: tuple[int, int, int]

    def of(self, u: int, v: int) -> int:
        return self.cls[(u, v) if u < v else (v, u)]

    def class_neighbors(self, g: PlaneTriangulation, v: int, q: int) -> list[int]:
        return [w for w in g.rotation[v] if self.of(v, w) == q]


def classify_edges(
    g: PlaneTriangulation, c: Coloring, anchor: int, g0: int | None = None
) -> EdgeClassification:
    """Split edges into the three factors induced by the color pairs.

    Colors are renamed so the anchor is 3 and its ``q``-th counter-clockwise
    neighbour (starting from ``g0``) is ``q``.  Then class 0 is the pairs
    {3,0} and {1,2}, class 1 is {3,1} and {0,2}, class 2 is {3,2} and {0,1}.
    """
    if g.degree(anchor) != 3:
        raise DomainError(f"anchor {anchor} has degree {g.degree(anchor)}, expected 3")
    if not c.is_nonsingular(g):
        raise DomainError("classification needs a nonsingular coloring")
    if g0 is None:
        g0 = g.rotation[anchor][0]
    x0 = g0
    x1 = g.succ(anchor, x0)
    x2 = g.succ(anchor, x1)
    rename = {c[anchor]: 3, c[x0]: 0, c[x1]: 1, c[x2]: 2}
    cls = {}
    for u, v in g.edges():
        a, b = rename[c[u]], rename[c[v]]
        if a == 3:
            q = b
        elif b == 3:
            q = a
        else:
            q = 3 - a - b
        cls[(u, v)] = q
    ec = EdgeClassification(cls, anchor, (x0, x1, x2))
    for v, r in enumerate(g.rotation):
        for i, w in enumerate(r):
            if ec.of(v, r[(i + 1) % len(r)]) != (ec.of(v, w) + 1) % 3:
                raise ConsistencyError(f"edge classes are not successive around vertex {v}")
    return ec
