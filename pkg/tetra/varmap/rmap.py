import logging

from tetra.groebner import Ideal
from tetra.modfield import FMatrix
from tetra.polyring import RingDescriptor
from tetra.polyring import apply_ring_map
from tetra.polyring import compose_images
from tetra.polyring import format_poly
from tetra.polyring import jacobian
from tetra.polyring import read_map_file
from tetra.polyring.exc import LengthMismatch
from tetra.polyring.exc import RingMismatch
from tetra.varmap.exc import BasePointError
from tetra.varmap.point import ProjectivePoint


class RationalMap(object):
    """A rational map ``source ⇢ target`` given by one homogeneous form
    per target variable, all of the same degree.

    Args:
        source: ring of the source projective space.
        target: ring of the target projective space.
        forms: the defining forms, in target-variable order.
        source_ideal: optional :class:`Ideal` of a source subvariety the
            map is restricted to.
    """
    logger = logging.getLogger('tetra.varmap')

    def __init__(self, source, target, forms, source_ideal=None, name=None):
        forms = [f.set_ring(source) for f in forms]
        if len(forms) != target.nvars:
            raise LengthMismatch("%s forms for %s target variables"
                % (len(forms), target.nvars))
        if source.prime != target.prime:
            raise RingMismatch("source and target moduli differ")
        degrees = {f.degree() for f in forms if f}
        if len(degrees) > 1 or not all(f.is_homogeneous() for f in forms):
            raise ValueError("forms must be homogeneous of one degree")
        if not degrees:
            raise ValueError("all forms vanish identically")
        self.source = source
        self.target = target
        self.forms = forms
        self.degree = degrees.pop()
        self.source_ideal = source_ideal
        self.name = name or 'map'
        self._jacobian = None

    @classmethod
    def from_file(cls, path, prime=None, name=None):
        source, target, forms = read_map_file(path, prime=prime)
        return cls(source, target, forms, name=name)

    @classmethod
    def identity(cls, ring):
        return cls(ring, ring, ring.gens, name='identity')

    @classmethod
    def linear_projection(cls, source, coordinates, target=None, source_ideal=None):
        """Projection onto the given source coordinates."""
        coordinates = [source.variables[source.index(c)] for c in coordinates]
        if target is None:
            target = RingDescriptor(['t_%s' % i for i in range(len(coordinates))],
                source.prime)
        return cls(source, target, [source.gen(c) for c in coordinates],
            source_ideal=source_ideal, name='projection')

    def restrict(self, ideal):
        """The same forms, restricted to the subvariety ``V(ideal)``."""
        return RationalMap(self.source, self.target, self.forms,
            source_ideal=ideal.set_ring(self.source), name=self.name)

    def compose(self, inner):
        """Return ``self ∘ inner``; the target of `inner` is identified
        with our source by position.
        """
        if not inner.target.same_shape(self.source):
            raise RingMismatch("%r does not land in %r" % (inner.target, self.source))
        forms = compose_images(self.forms, inner.forms)
        return RationalMap(inner.source, self.target, forms,
            source_ideal=inner.source_ideal, name='%s*%s' % (self.name, inner.name))

    def values_at(self, point):
        return [f.evaluate(point) for f in self.forms]

    def evaluate(self, point):
        """Image of `point`; raises :class:`BasePointError` if every
        form vanishes there.
        """
        values = self.values_at(point)
        if not any(values):
            raise BasePointError("%s is a base point of %s" % (point, self.name))
        return ProjectivePoint(values, self.source.prime)

    __call__ = evaluate

    def pullback(self, ideal):
        """``φ^*(J)``: substitute the forms into the generators of `J`."""
        ideal = ideal.set_ring(self.target)
        gens = [apply_ring_map(self.forms, g) for g in ideal.generators]
        if self.source_ideal is not None:
            gens.extend(self.source_ideal.generators)
        return Ideal(self.source, gens)

    def forms_ideal(self):
        gens = list(self.forms)
        if self.source_ideal is not None:
            gens.extend(self.source_ideal.generators)
        return Ideal(self.source, gens)

    def jacobian_at(self, point):
        """The jacobian matrix of the forms evaluated at `point`."""
        if self._jacobian is None:
            self._jacobian = jacobian(self.forms)
        rows = [[d.evaluate(point) for d in row] for row in self._jacobian]
        return FMatrix.from_rows(rows, self.source.prime, cols=self.source.nvars)

    def jacobian_rank(self, point):
        """Rank of the jacobian of the forms at `point`."""
        return self.jacobian_at(point).rank()

    def is_monomial(self):
        return all(len(f) == 1 for f in self.forms)

    def text(self):
        lines = ["map p=%s source=%s target=%s" % (self.source.prime,
            ','.join(self.source.variables), ','.join(self.target.variables))]
        lines.extend(format_poly(f) for f in self.forms)
        return '\n'.join(lines) + '\n'

    def __repr__(self):
        return "RationalMap(%s: P^%s ⇢ P^%s, degree %s)" % (self.name,
            self.source.nvars - 1, self.target.nvars - 1, self.degree)
