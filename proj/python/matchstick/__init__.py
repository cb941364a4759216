"""Census engine for connected graphs drawable with non-crossing unit segments.

Graphs travel as text: ``"n:u-v,u-v,..."`` where ``n`` is the vertex count and
each ``u-v`` an edge.  Drawings travel as text too, one ``vertex x y`` line per
vertex.  The heavy lifting happens in the compiled ``_core`` module; this
package just re-exports it.
"""

from ._core import (
    automorphism_count,
    canonical_key,
    canonical_text,
    census_counts,
    enumerate_connected,
    exact_obstruction,
    face_count,
    is_isomorphic,
    is_planar,
    planar_connected_count,
    realize,
    smooth,
    topo_key,
    validate,
)

__all__ = [
    "automorphism_count",
    "canonical_key",
    "canonical_text",
    "census_counts",
    "enumerate_connected",
    "exact_obstruction",
    "face_count",
    "is_isomorphic",
    "is_planar",
    "planar_connected_count",
    "realize",
    "smooth",
    "topo_key",
    "validate",
]

__version__ = "1.0.0"
