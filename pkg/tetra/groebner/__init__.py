from tetra.groebner.buchberger import GroebnerBasis
from tetra.groebner.buchberger import spoly
from tetra.groebner.reduction import divide_exact
from tetra.groebner.reduction import normal_form
from tetra.groebner.ideal import Ideal
from tetra.groebner.ideal import irrelevant_ideal
from tetra.groebner.ideal import linear_span_ideal
from tetra.groebner.ideal import point_ideal
from tetra.groebner.ideal import unit_ideal
from tetra.groebner.elimination import eliminate
from tetra.groebner.elimination import intersect
from tetra.groebner.elimination import quotient
from tetra.groebner.elimination import saturate
from tetra.groebner.elimination import saturate_element
from tetra.groebner.hilbert import hilbert_dim_degree
from tetra.groebner.hilbert import hilbert_function
from tetra.groebner.hilbert import hilbert_series_numerator
from tetra.groebner.cone import local_ideal
from tetra.groebner.cone import standard_basis
from tetra.groebner.cone import tangent_cone
from tetra.groebner.points import PointList
from tetra.groebner.points import rational_points_zero_dim
from tetra.groebner.points import univariate_roots
from tetra.groebner.toric import lattice_kernel
from tetra.groebner.toric import toric_ideal
from tetra.groebner.oracle import lowest_forms_up_to
from tetra.groebner.oracle import truncated_membership


def groebner_basis(ideal, order=None):
    """The reduced Gröbner basis of `ideal` for `order`."""
    return ideal.groebner(order)


def contains(I, J):
    """True if `J` is contained in `I`."""
    return I.contains(J)
