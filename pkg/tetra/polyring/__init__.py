from tetra.polyring.order import MonomialOrder
from tetra.polyring.order import GREVLEX
from tetra.polyring.order import LEX
from tetra.polyring.order import LT, EQ, GT
from tetra.polyring.order import compare_monomials
from tetra.polyring.ring import RingDescriptor
from tetra.polyring.ring import expand_variables
from tetra.polyring.poly import Polynomial
from tetra.polyring.parse import parse_poly
from tetra.polyring.parse import format_poly
from tetra.polyring.parse import parse_ideal_text
from tetra.polyring.parse import parse_map_text
from tetra.polyring.parse import read_ideal_file
from tetra.polyring.parse import read_map_file
from tetra.polyring.parse import write_ideal_file
from tetra.polyring.ringmap import apply_ring_map
from tetra.polyring.ringmap import compose_images
from tetra.polyring.jacobian import jacobian
from tetra.polyring.jacobian import jacobian_minors
from tetra.polyring.jacobian import minors
from tetra.polyring.family import ParametricFamily


def lowest_form(f):
    """The homogeneous component of `f` of minimal total degree."""
    return f.lowest_form()
