"""Linear systems of forms with assigned multiplicities at points.

A point of multiplicity m is imposed in the affine chart of its last
nonzero coordinate: after translating the point to the origin, every
coefficient of degree below m must vanish. These coefficients are
linear in the parameters of the family and form the condition matrix.
"""
import logging
from math import comb

from tetra.const import DEFAULT_PRIME
from tetra.groebner import hilbert_function
from tetra.modfield import FMatrix
from tetra.modfield import inverse_mod
from tetra.polyring import ParametricFamily
from tetra.polyring import RingDescriptor
from tetra.polyring import apply_ring_map
from tetra.polyring.family import EmptyFamily
from tetra.varmap.point import ProjectivePoint


def condition_rows(members, point, multiplicity):
    """Rows of the condition matrix for a point of `multiplicity` on
    the span of `members`: one row per chart monomial of degree below
    `multiplicity`, one column per member.
    """
    assert multiplicity >= 1, "multiplicity must be positive"
    ring = members[0].ring
    p = ring.p
    values = [int(c) % p for c in point]
    c = max(i for i, v in enumerate(values) if v)
    inv = inverse_mod(values[c], p)
    values = [(v * inv) % p for v in values]
    chart = RingDescriptor([v for i, v in enumerate(ring.variables) if i != c], p)
    images = []
    for i, name in enumerate(ring.variables):
        images.append(chart.one() if i == c else chart.gen(name) + values[i])
    translated = [apply_ring_map(images, f) for f in members]
    rows = []
    for d in range(multiplicity):
        for m in chart.monomials(d):
            rows.append([f.terms.get(m, 0) for f in translated])
    return rows


class LinearSystemWithConditions(object):
    """A :class:`ParametricFamily` together with point conditions
    ``(point, multiplicity)``.
    """
    logger = logging.getLogger('tetra.varmap')

    def __init__(self, family, conditions=()):
        self.family = family
        self.conditions = [(ProjectivePoint(x, family.ring.prime)
            if not isinstance(x, ProjectivePoint) else x, m) for x, m in conditions]

    def impose(self, point, multiplicity):
        return LinearSystemWithConditions(self.family,
            self.conditions + [(point, multiplicity)])

    def condition_matrix(self):
        members = self.family.members()
        rows = []
        for x, m in self.conditions:
            rows.extend(condition_rows(members, x, m))
        return FMatrix.from_rows(rows, self.family.ring.prime, cols=len(members))

    @property
    def rank(self):
        return self.condition_matrix().rank()

    @property
    def parameter_count(self):
        """Number of parameters that survive the conditions."""
        return len(self.family) - self.rank

    def subfamily(self):
        """The surviving family. Parameters are named after the free
        columns of the condition matrix, in ascending order.
        """
        matrix = self.condition_matrix()
        _, rank, kernel = matrix.row_reduce()
        if not kernel:
            return EmptyFamily(self.family.geometric_ring, self.family.degree)
        pivots = set(matrix.pivots())
        names = [x for i, x in enumerate(self.family.parameters) if i not in pivots]
        self.logger.debug("Imposed %s conditions of rank %s; %s parameters remain",
            len(self.conditions), rank, len(kernel))
        return self.family.reparametrize(kernel, names)


def impose_point_multiplicity(family, point, multiplicity):
    """The subfamily of `family` with multiplicity at least
    `multiplicity` at `point`.
    """
    return LinearSystemWithConditions(family, [(point, multiplicity)]).subfamily()


def plane_system_dimension(degree, conditions, p=DEFAULT_PRIME):
    """Projective dimension of the plane curves of `degree` with the
    given ``(point, multiplicity)`` conditions; -1 when empty.
    """
    ring = RingDescriptor('x_0..x_2', p)
    members = [ring.monomial(m) for m in ring.monomials(degree)]
    rows = []
    for x, m in conditions:
        rows.extend(condition_rows(members, x, m))
    rank = FMatrix.from_rows(rows, p, cols=len(members)).rank()
    return comb(degree + 2, 2) - rank - 1


def linear_system_dimension(ring, degree, ideal):
    """Projective dimension of the forms of `degree` in `ideal`."""
    total = len(ring.monomials(degree))
    return total - hilbert_function(ideal.set_ring(ring), degree) - 1


def full_family(ring, degree, prefix='l'):
    """The complete linear system of forms of `degree`."""
    members = [ring.monomial(m) for m in ring.monomials(degree)]
    names = ['%s_%s' % (prefix, i) for i in range(len(members))]
    return ParametricFamily.from_members(members, names)
