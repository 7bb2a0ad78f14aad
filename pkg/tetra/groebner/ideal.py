import hashlib
import logging

from tetra.modfield import FMatrix
from tetra.polyring import GREVLEX
from tetra.polyring import Polynomial
from tetra.polyring import apply_ring_map
from tetra.polyring import format_poly
from tetra.polyring import parse_ideal_text
from tetra.polyring import read_ideal_file
from tetra.polyring.exc import RingMismatch
from tetra.groebner.buchberger import GroebnerBasis
from tetra.groebner.reduction import normal_form


class Ideal(object):
    """An ideal of a polynomial ring, given by generators.

    Reduced Gröbner bases are computed on demand and cached per
    monomial order; generators are never modified, so the cache is
    write-once.
    """
    logger = logging.getLogger('tetra.groebner')

    def __init__(self, ring, generators=()):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring is not ring:
                g = g.set_ring(ring)
            if g:
                gens.append(g)
        self.generators = tuple(gens)
        self._bases = {}

    @classmethod
    def parse(cls, text, prime=None):
        ring, gens = parse_ideal_text(text, prime=prime)
        return cls(ring, gens)

    @classmethod
    def from_file(cls, path, prime=None):
        ring, gens = read_ideal_file(path, prime=prime)
        return cls(ring, gens)

    def groebner(self, order=None):
        """Return the reduced :class:`GroebnerBasis` for `order`
        (default: the ring's order).
        """
        order = order or self.ring.order
        try:
            return self._bases[order]
        except KeyError:
            pass
        ring = self.ring.with_order(order)
        gb = GroebnerBasis.compute(ring, self.generators)
        self._bases[order] = gb
        return gb

    @property
    def homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def is_homogeneous(self):
        return self.homogeneous

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        if any(g.is_constant() for g in self.generators):
            return True
        return self.groebner().is_unit()

    def _check(self, other):
        if not self.ring.compatible(other.ring):
            raise RingMismatch("%r and %r" % (self.ring, other.ring))

    def reduce(self, f):
        """Normal form of `f` modulo the ideal (ring order)."""
        return normal_form(f, self.groebner())

    def contains_poly(self, f):
        if not f.ring.compatible(self.ring):
            raise RingMismatch("%r and %r" % (f.ring, self.ring))
        return not self.groebner().reduce(f)

    def contains(self, other):
        """True if every generator of `other` lies in this ideal."""
        self._check(other)
        if not other.generators:
            return True
        gb = self.groebner()
        return all(not gb.reduce(g) for g in other.generators)

    def __add__(self, other):
        self._check(other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other):
        self._check(other)
        return Ideal(self.ring,
            [f * g.set_ring(self.ring) for f in self.generators for g in other.generators])

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if not self.ring.compatible(other.ring):
            return False
        return [g.terms for g in self.groebner(GREVLEX)]\
            == [g.terms for g in other.groebner(GREVLEX)]

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.hash_key())

    def intersect(self, other):
        from tetra.groebner.elimination import intersect
        return intersect(self, other)

    def quotient(self, other):
        from tetra.groebner.elimination import quotient
        return quotient(self, other)

    def saturate(self, other):
        from tetra.groebner.elimination import saturate
        return saturate(self, other)

    def eliminate(self, block):
        from tetra.groebner.elimination import eliminate
        return eliminate(self, block)

    def dim_degree(self):
        from tetra.groebner.hilbert import hilbert_dim_degree
        return hilbert_dim_degree(self)

    def set_ring(self, ring):
        return Ideal(ring, [g.set_ring(ring) for g in self.generators])

    def map(self, images):
        """Pull back along a ring map: substitute `images` (one per
        variable of this ring, all in a common target ring).
        """
        target = images[0].ring
        return Ideal(target, [apply_ring_map(images, g) for g in self.generators])

    def canonical_text(self):
        """Header plus the reduced grevlex basis, one element per line."""
        ring = self.ring.with_order(GREVLEX)
        lines = [ring.header()]
        lines.extend(format_poly(g) for g in self.groebner(GREVLEX))
        return '\n'.join(lines) + '\n'

    def hash_key(self):
        """SHA-256 hex digest of :meth:`canonical_text`."""
        return hashlib.sha256(self.canonical_text().encode('utf-8')).hexdigest()

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return "Ideal(%s generators in %s)" % (len(self.generators),
            ','.join(self.ring.variables))

    def __str__(self):
        return "(%s)" % ', '.join(format_poly(g, signed=True) for g in self.generators)


def irrelevant_ideal(ring):
    """The ideal generated by all variables."""
    return Ideal(ring, ring.gens)


def unit_ideal(ring):
    return Ideal(ring, [ring.one()])


def linear_span_ideal(ring, points):
    """Ideal of the projective linear span of `points`: the linear
    forms vanishing at every point.
    """
    points = [[int(x) for x in pt] for pt in points]
    matrix = FMatrix.from_rows(points, ring.prime, cols=ring.nvars)
    forms = []
    for v in matrix.kernel():
        forms.append(Polynomial(ring, {
            tuple(int(i == j) for i in range(ring.nvars)): c
            for j, c in enumerate(v) if c}))
    return Ideal(ring, forms)


def point_ideal(ring, point):
    """Ideal of a single projective point."""
    return linear_span_ideal(ring, [point])
