"""gridmatch: wedge-of-spheres calculus and brute-force homology for
matching complexes of 3 x n grid graphs (and friends)."""

__version__ = "0.1.0"

from .graphs import (Graph, V, VertexLabel, build_cycle, build_grid,  # noqa: F401
                     build_path, line_graph)
from .families import build_family  # noqa: F401
from .complexes import (SimplicialComplex, face_table, independence_complex,  # noqa: F401
                        matching_complex)
from .homology import BettiVector, betti_reduced, euler_characteristic_reduced  # noqa: F401
from .wedges import (WedgeExpression, dimension_range, homotopy_type,  # noqa: F401
                     matching_grid3, suspend, wedge)
