"""Residues modulo a prime and the :class:`Field` factory that owns
the modulus.
"""
import functools

import sympy

from tetra.const import DEFAULT_PRIME
from tetra.modfield.exc import DivisionByZero
from tetra.modfield.exc import FieldMismatch
from tetra.modfield.exc import InvalidModulus


def egcd(a, b):
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def inverse_mod(a, p):
    """Return the inverse of the integer `a` modulo `p`."""
    a %= p
    if a == 0:
        raise DivisionByZero("0 has no inverse modulo %s" % p)
    g, x, _ = egcd(a, p)
    assert g == 1, "modulus %s is not prime" % p
    return x % p


def inv(a, p=None):
    """Multiplicative inverse of a :class:`FieldScalar` (or of an
    integer modulo `p`).
    """
    if isinstance(a, FieldScalar):
        return FieldScalar(inverse_mod(a.value, a.p), a.p)
    return FieldScalar(inverse_mod(a, p or DEFAULT_PRIME), p or DEFAULT_PRIME)


class FieldScalar(object):
    """An element of the prime field F_p."""
    __slots__ = ('value', 'p')

    def __init__(self, value, p=DEFAULT_PRIME):
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'value', int(value) % p)

    def __setattr__(self, attname, value):
        raise AttributeError("FieldScalar is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldScalar):
            if other.p != self.p:
                raise FieldMismatch("%s != %s" % (self.p, other.p))
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldScalar(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldScalar(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldScalar(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldScalar(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldScalar(self.value * inverse_mod(v, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldScalar(v * inverse_mod(self.value, self.p), self.p)

    def __neg__(self):
        return FieldScalar(-self.value, self.p)

    def __pow__(self, n):
        if n < 0:
            return FieldScalar(pow(inverse_mod(self.value, self.p), -n, self.p), self.p)
        return FieldScalar(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        # agrees with the hash of the reduced integer, which compares equal
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def signed(self):
        """Return the representative in ``(-p/2, p/2]``."""
        return self.value if self.value <= self.p // 2 else self.value - self.p

    def __repr__(self):
        return "FieldScalar(%s, p=%s)" % (self.value, self.p)

    def __str__(self):
        return str(self.value)


class Field(object):
    """The prime field F_p. Use :func:`get_field` to obtain shared
    instances.
    """

    def __init__(self, p=DEFAULT_PRIME):
        p = int(p)
        if p <= 2 or not sympy.isprime(p):
            raise InvalidModulus("%s is not an odd prime" % p)
        self.p = p
        self._gf = None

    @property
    def gf(self):
        """The :mod:`galois` field class for this modulus."""
        if self._gf is None:
            import galois
            self._gf = galois.GF(self.p)
        return self._gf

    def __call__(self, value):
        return FieldScalar(value, self.p)

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(('Field', self.p))

    def zero(self):
        return FieldScalar(0, self.p)

    def one(self):
        return FieldScalar(1, self.p)

    def random(self, rng, nonzero=False):
        """Draw a uniform element using the numpy generator `rng`."""
        low = 1 if nonzero else 0
        return FieldScalar(int(rng.integers(low, self.p)), self.p)

    def __repr__(self):
        return "Field(%s)" % self.p


@functools.lru_cache(maxsize=None)
def get_field(p=DEFAULT_PRIME):
    return Field(p)
