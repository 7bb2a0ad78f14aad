from tetra.const import DEFAULT_PRIME
from tetra.groebner import linear_span_ideal
from tetra.modfield import FieldScalar
from tetra.modfield import inverse_mod


class ProjectivePoint(object):
    """A point of P^n over F_p, stored with its first nonzero
    coordinate scaled to 1.
    """
    __slots__ = ('values', 'p')

    def __init__(self, coordinates, p=DEFAULT_PRIME):
        values = [int(x) % p for x in coordinates]
        lead = next((x for x in values if x), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        inv = inverse_mod(lead, p)
        self.values = tuple((x * inv) % p for x in values)
        self.p = p

    @classmethod
    def canonical(cls, coordinates, p=DEFAULT_PRIME):
        return cls(coordinates, p)

    @classmethod
    def random(cls, rng, n, p=DEFAULT_PRIME):
        """A uniform point with `n` coordinates, drawn from `rng`."""
        while True:
            values = [int(x) for x in rng.integers(0, p, size=n)]
            if any(values):
                return cls(values, p)

    @property
    def coordinates(self):
        return tuple(FieldScalar(x, self.p) for x in self.values)

    def affine_chart(self):
        """Index of the last nonzero coordinate."""
        return max(i for i, x in enumerate(self.values) if x)

    def chart_coordinates(self):
        """Coordinates scaled so that the chart coordinate is 1."""
        c = self.affine_chart()
        inv = inverse_mod(self.values[c], self.p)
        return tuple((x * inv) % self.p for x in self.values)

    def signed(self):
        return tuple(x if x <= self.p // 2 else x - self.p for x in self.values)

    def as_ideal(self, ring):
        return linear_span_ideal(ring, [self.values])

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other):
        if isinstance(other, ProjectivePoint):
            return self.p == other.p and self.values == other.values
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.values, self.p))

    def __repr__(self):
        return "[%s]" % ':'.join(str(x) for x in self.signed())


def line_through(ring, a, b):
    """Ideal of the line spanned by two projective points."""
    return linear_span_ideal(ring, [list(a), list(b)])
