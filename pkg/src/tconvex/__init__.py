"""t-convex polygons of the Lorentz plane, their coarea form and orthoschemes."""

from .coarea import (
    GramMatrix,
    gram,
    is_positive_definite,
    mixed_coarea,
    normalize_unit_coarea,
    reversed_minkowski,
)
from .cone_manifold import enumerate_charts, involution, n_face_total_angle, s_cone_angle
from .errors import GeometryError
from .lorentz import LVec, classify, hyp_translate, langle, line_intersect, lprod, support_line
from .orthoscheme import arc_length_n2, cross_ratio, dihedral_cosines, solve_angles_from_dihedral
from .polygon import (
    PolygonSpec,
    coarea_formula,
    coarea_geometric,
    edge_lengths,
    half_lengths,
    is_t_convex,
    normals,
    vertices,
)

__version__ = "0.1.0"
