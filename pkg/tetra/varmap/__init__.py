from tetra.varmap.point import ProjectivePoint
from tetra.varmap.point import line_through
from tetra.varmap.rmap import RationalMap
from tetra.varmap.sampling import chain_forms
from tetra.varmap.sampling import chain_rank
from tetra.varmap.sampling import sample_points
from tetra.varmap.sampling import sample_source
from tetra.varmap.sampling import sample_span
from tetra.varmap.image import STRATEGIES
from tetra.varmap.image import BaseImageStrategy
from tetra.varmap.image import EliminationStrategy
from tetra.varmap.image import InterpolationStrategy
from tetra.varmap.image import ToricStrategy
from tetra.varmap.image import AutoStrategy
from tetra.varmap.image import get_strategy
from tetra.varmap.image import image
from tetra.varmap.baselocus import BaseLocusCertificate
from tetra.varmap.baselocus import base_locus
from tetra.varmap.baselocus import certify_base_components
from tetra.varmap.fiber import fiber
from tetra.varmap.fiber import is_birational
from tetra.varmap.fiber import map_degree
from tetra.varmap.inverse import inverse_map
from tetra.varmap.inverse import same_map
from tetra.varmap.singular import NODE
from tetra.varmap.singular import OTHER
from tetra.varmap.singular import QUADRIC_CONE_NODE
from tetra.varmap.singular import SMOOTH
from tetra.varmap.singular import node_type
from tetra.varmap.singular import singular_locus
from tetra.varmap.conditions import LinearSystemWithConditions
from tetra.varmap.conditions import full_family
from tetra.varmap.conditions import impose_point_multiplicity
from tetra.varmap.conditions import linear_system_dimension
from tetra.varmap.conditions import plane_system_dimension
from tetra.varmap.quadrilateral import plane_cubic_map
from tetra.varmap.quadrilateral import plane_cubic_system
from tetra.varmap.quadrilateral import quadrilateral_vertices
from tetra.varmap.quadrilateral import seeded_quadrilateral
from tetra.varmap.geometry import contracted_image
from tetra.varmap.geometry import fixed_point_images
from tetra.varmap.geometry import linear_embedding
from tetra.varmap.geometry import projection_from_span
from tetra.varmap.geometry import random_plane_through
from tetra.varmap.geometry import restrict_to_plane
from tetra.varmap.geometry import surviving_coordinates


def eval_map(phi, x):
    """Image of the point `x` under `phi`."""
    return phi.evaluate(x)
