"""Divisor classes on the iterated blow-up of P^3 at the vertices and
edges of the coordinate tetrahedron and at a general point p.

The basis is fixed: the hyperplane class H, the exceptional divisor Ep
over p, the strict transforms E0..E3 over the vertices, E'1..E'3 and
E''1..E''3 over the points blown up on Ep and on its transforms, F01..F23
over the edges and R1..R3 over the three lines through p.
"""
from tetra.cremona.exc import BasisMismatch


BASIS = ('H', 'Ep') + tuple('E%s' % i for i in range(4))\
    + tuple("E'%s" % i for i in range(1, 4))\
    + tuple("E''%s" % i for i in range(1, 4))\
    + tuple('F%s%s' % (i, j) for i in range(4) for j in range(i + 1, 4))\
    + tuple('R%s' % i for i in range(1, 4))


def group(prefix):
    """Basis names of one family, e.g. ``group('F')``."""
    return tuple(x for x in BASIS if x.startswith(prefix)
        and x[len(prefix):].isdigit())


class DivisorClass(object):
    """An integer combination of the basis classes."""

    def __init__(self, coefficients=None, basis=BASIS):
        self.basis = tuple(basis)
        coefficients = dict(coefficients or {})
        unknown = set(coefficients) - set(self.basis)
        if unknown:
            raise BasisMismatch("not in the basis: %s" % ', '.join(sorted(unknown)))
        self.coefficients = tuple(int(coefficients.get(x, 0)) for x in self.basis)

    @classmethod
    def zero(cls, basis=BASIS):
        return cls({}, basis)

    @classmethod
    def combination(cls, *terms, **kwargs):
        """Build ``sum(c * group)`` from ``(c, names)`` pairs."""
        coefficients = {}
        for c, names in terms:
            if isinstance(names, str):
                names = (names,)
            for x in names:
                coefficients[x] = coefficients.get(x, 0) + c
        return cls(coefficients, **kwargs)

    def coefficient(self, name):
        return self.coefficients[self.basis.index(name)]

    def _check(self, other):
        if not isinstance(other, DivisorClass):
            raise TypeError("not a divisor class: %r" % (other,))
        if other.basis != self.basis:
            raise BasisMismatch("divisor classes over different bases")

    def _new(self, values):
        return DivisorClass(dict(zip(self.basis, values)), self.basis)

    def __add__(self, other):
        self._check(other)
        return self._new(a + b for a, b in zip(self.coefficients, other.coefficients))

    def __sub__(self, other):
        self._check(other)
        return self._new(a - b for a, b in zip(self.coefficients, other.coefficients))

    def __neg__(self):
        return self._new(-a for a in self.coefficients)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return self._new(k * a for a in self.coefficients)

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self.basis == other.basis and self.coefficients == other.coefficients

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.basis, self.coefficients))

    def format(self):
        """Print as ``6H - 3Ep - 3E0 ...``, zero terms omitted."""
        out = ''
        for x, c in zip(self.basis, self.coefficients):
            if not c:
                continue
            sign = '-' if c < 0 else '+'
            k = '' if abs(c) == 1 else str(abs(c))
            if not out:
                out = '%s%s%s' % ('-' if c < 0 else '', k, x)
            else:
                out += ' %s %s%s' % (sign, k, x)
        return out or '0'

    def __repr__(self):
        return "DivisorClass(%s)" % self.format()


def class_sum(a, b):
    return a + b


def sigma_class():
    """Strict transform of a general sextic double along the edges and
    triple at p.
    """
    return DivisorClass.combination(
        (6, 'H'), (-3, 'Ep'), (-3, group('E')), (-2, group("E'")),
        (-2, group("E''")), (-2, group('F')), (-1, group('R')))


def canonical_class():
    """Canonical class of the blow-up."""
    return DivisorClass.combination(
        (-4, 'H'), (2, 'Ep'), (2, group('E')), (2, group("E'")),
        (2, group("E''")), (1, group('F')), (1, group('R')))


def edge_quadric_class():
    """Strict transform of a quadric containing the six edges."""
    return DivisorClass.combination((2, 'H'), (-1, group('E')), (-1, group('F')))
