"""Graph layer: rotation systems, colorings, class factors and construction."""

from __future__ import annotations

from .build import build
from .canon import canonical_form, canonical_form_hex, is_isomorphic, iso_key
from .coloring import Coloring, EdgeClassification, classify_edges, default_anchor, nonsingular_coloring
from .graph import PlaneTriangulation, rotation_from_faces
from .kempe import is_akempic_bruteforce, kempe_closure
from .structure import (
    ClassMeasure,
    DirectedClassPath,
    FactorStructure,
    branch_index,
    branch_side,
    crossing_sequence,
    directed_path,
    factor_structure,
    index_vectors_from_graph,
    measure_classes,
    minimal_crossings,
    s_values,
)


def mirror_graph(g: PlaneTriangulation) -> PlaneTriangulation:
    """Reflection of ``g``: every rotation read clockwise."""
    return g.mirror()


__all__ = [
    "PlaneTriangulation",
    "rotation_from_faces",
    "Coloring",
    "EdgeClassification",
    "nonsingular_coloring",
    "classify_edges",
    "default_anchor",
    "DirectedClassPath",
    "FactorStructure",
    "ClassMeasure",
    "directed_path",
    "factor_structure",
    "branch_side",
    "branch_index",
    "s_values",
    "measure_classes",
    "index_vectors_from_graph",
    "crossing_sequence",
    "minimal_crossings",
    "build",
    "kempe_closure",
    "is_akempic_bruteforce",
    "canonical_form",
    "canonical_form_hex",
    "iso_key",
    "is_isomorphic",
    "mirror_graph",
]
