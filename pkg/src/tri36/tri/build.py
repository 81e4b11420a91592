"""Construct the triangulation realising a given index vector.

The class-0 factor of the result is ``k`` stacked annuli of width ``2m``:
ring 0 and ring ``k`` are folded in half (giving the two maximal paths of
length ``m``) and the rings in between stay as cycles of length ``2m``.
The fold of ring ``k`` is a free rotation parameter; it is calibrated by
measuring S+ on each candidate.
"""

from __future__ import annotations

from ..errors import ConsistencyError, DomainError
from ..ivec import IndexVector, check_vector, improper_form
from .coloring import classify_edges, nonsingular_coloring
from .graph import PlaneTriangulation, rotation_from_faces
from .structure import s_values

__all__ = ["build", "candidate"]


def candidate(k: int, m: int, c: int) -> PlaneTriangulation | None:
    """Stacked annuli with ring ``k`` folded about position ``c``."""
    two_m = 2 * m
    base_k = m + 1 + (k - 1) * two_m

    def vid(r: int, j: int) -> int:
        t = j % two_m
        if r == 0:
            return t if t <= m else two_m - t
        if r == k:
            t = (j - c) % two_m
            if t > m:
                t = two_m - t
            return base_k + t
        return m + 1 + (r - 1) * two_m + t

    faces = []
    for r in range(k):
        for j in range(two_m):
            faces.append((vid(r, j), vid(r + 1, j + 1), vid(r, j + 1)))
            faces.append((vid(r, j), vid(r + 1, j), vid(r + 1, j + 1)))
    return rotation_from_faces(2 * k * m + 2, faces, first={0: 1})


def build(v) -> PlaneTriangulation:
    """Triangulation whose class-0 vector, anchored at vertex 0, is ``v``.

    Vertex 0 has degree 3 and ``rotation[0]`` starts at its class-0 edge.
    """
    k, m, s = check_vector(v)
    form = improper_form(IndexVector(k, m, s))
    if form is not None:
        raise DomainError(f"improper vector {form} has no realising triangulation")
    for c in range(m):
        g = candidate(k, m, c)
        if g is None or g.validation_errors():
            continue
        try:
            ec = classify_edges(g, nonsingular_coloring(g), 0, g.rotation[0][0])
            s_plus, _ = s_values(g, ec, 0)
        except ConsistencyError:
            continue
        if s_plus == s:
            assert g.vertex_count == 2 * k * m + 2
            return g
    raise ConsistencyError(f"no fold of the outer ring realises {(k, m, s)}")
