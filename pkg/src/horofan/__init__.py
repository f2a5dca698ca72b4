"""Coloured fans for horospherical varieties.

Exact combinatorial machinery: Dynkin diagrams and the per-colour
smoothness condition, integer linear algebra (Smith normal form,
saturation), strongly convex rational cones, coloured fans, the
simplicial / regular / vivid / toroidal classification with its global
verdicts (Q-factorial, factorial, smooth, quotient singularities), torus
factor splitting, and the combinatorial Cox construction.
"""

from .classification import ConeClassification, Verdict, classify, classify_cone, \
    is_regular, is_simplicial, is_vivid, simplicial_multiset
from .cones import BOUNDARY, OUTSIDE, RELATIVE_INTERIOR, Cone, \
    cone_from_generators, contains, faces, intersect, is_face_of, primitive, \
    zero_cone
from .cox import CoxConsistency, CoxData, TorusSplit, cox_consistency, \
    cox_construct, has_torus_factors, torus_split
from .document import FanDocument, build, parse, render
from .dynkin import DynkinData, DynkinEdge, TypeLabel, connected_component, \
    is_projective_space_product, recognize_type, standard_diagram, \
    validate_diagram, vivid_colour_ok
from .fans import ColouredCone, ColouredFan, ColouredLattice, coloured_face, \
    coloured_rays, validate_fan
from .lattice import FGAbelianGroup, cokernel_structure, extends_to_Z_basis, \
    is_linearly_independent, rank_of, saturate, smith_normal_form
from .local import LocalModel, affine_local, decolour

__version__ = "0.1.0"

__all__ = [
    "BOUNDARY", "OUTSIDE", "RELATIVE_INTERIOR",
    "ColouredCone", "ColouredFan", "ColouredLattice", "Cone",
    "ConeClassification", "CoxConsistency", "CoxData", "DynkinData",
    "DynkinEdge", "FGAbelianGroup", "FanDocument", "LocalModel", "TorusSplit",
    "TypeLabel", "Verdict",
    "affine_local", "build", "classify", "classify_cone", "cokernel_structure",
    "coloured_face", "coloured_rays", "cone_from_generators",
    "connected_component", "contains", "cox_consistency", "cox_construct",
    "decolour", "extends_to_Z_basis", "faces", "has_torus_factors",
    "intersect", "is_face_of", "is_linearly_independent",
    "is_projective_space_product", "is_regular", "is_simplicial", "is_vivid",
    "parse", "primitive", "rank_of", "recognize_type", "render", "saturate",
    "simplicial_multiset", "smith_normal_form", "standard_diagram",
    "torus_split", "validate_diagram", "validate_fan", "vivid_colour_ok",
    "zero_cone",
]
