import itertools
import re

from tetra.const import DEFAULT_PRIME
from tetra.modfield import get_field
from tetra.polyring.exc import InvalidRing
from tetra.polyring.exc import ParseError
from tetra.polyring.exc import UnknownVariable
from tetra.polyring.order import GREVLEX
from tetra.polyring.order import MonomialOrder


VARIABLE_PATTERN = re.compile(r'^[A-Za-z][A-Za-z0-9]*(_[0-9]+)?$')
RANGE_PATTERN = re.compile(r'^([A-Za-z][A-Za-z0-9]*)_([0-9]+)\.\.\1_([0-9]+)$')


def expand_variables(spec):
    """Expand a comma-separated variable list, accepting the range
    shorthand ``w_0..w_13``.
    """
    if isinstance(spec, str):
        spec = [x.strip() for x in spec.split(',') if x.strip()]
    names = []
    for item in spec:
        m = RANGE_PATTERN.match(item)
        if m is None:
            names.append(item)
            continue
        prefix, lo, hi = m.group(1), int(m.group(2)), int(m.group(3))
        names.extend('%s_%s' % (prefix, i) for i in range(lo, hi + 1))
    return names


class RingDescriptor(object):
    """The polynomial ring F_p[variables] with a monomial order.

    Two descriptors are equal when prime, variables and order agree.
    Polynomials may move between descriptors that share variables
    (see :meth:`tetra.polyring.Polynomial.set_ring`).
    """

    def __init__(self, variables, prime=DEFAULT_PRIME, order=None):
        variables = tuple(expand_variables(variables))
        if len(set(variables)) != len(variables):
            raise InvalidRing("variable names must be unique: %s" % (variables,))
        for name in variables:
            if not VARIABLE_PATTERN.match(name):
                raise InvalidRing("invalid variable name: %r" % name)
        self.field = get_field(prime)
        self.prime = self.p = self.field.p
        self.variables = variables
        self.order = order or GREVLEX
        if self.order.kind == 'elim' and self.order.block > len(variables):
            raise InvalidRing("elimination block exceeds the variable count")
        self._index = {name: i for i, name in enumerate(variables)}
        self._monomials = {}

    @property
    def nvars(self):
        return len(self.variables)

    def index(self, var):
        """Return the position of `var`, given by name or position."""
        if isinstance(var, int):
            if not 0 <= var < self.nvars:
                raise UnknownVariable(var)
            return var
        try:
            return self._index[var]
        except KeyError:
            raise UnknownVariable(var)

    def __contains__(self, name):
        return name in self._index

    def gen(self, var):
        from tetra.polyring.poly import Polynomial
        i = self.index(var)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1}, check=False)

    @property
    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def zero(self):
        from tetra.polyring.poly import Polynomial
        return Polynomial(self, {}, check=False)

    def one(self):
        return self.const(1)

    def const(self, c):
        from tetra.polyring.poly import Polynomial
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exponents, coeff=1):
        from tetra.polyring.poly import Polynomial
        return Polynomial(self, {tuple(exponents): coeff})

    def with_order(self, order):
        if order == self.order:
            return self
        return RingDescriptor(self.variables, self.prime, order)

    def with_prime(self, prime):
        return RingDescriptor(self.variables, prime, self.order)

    def sub(self, variables, order=None):
        """Return the ring on a subset of the variables."""
        variables = expand_variables(variables)
        for name in variables:
            self.index(name)
        return RingDescriptor(variables, self.prime, order or GREVLEX)

    def extend(self, variables, front=True, order=None):
        """Return a ring with extra variables before (or after) the
        existing ones.
        """
        variables = expand_variables(variables)
        names = (tuple(variables) + self.variables) if front\
            else (self.variables + tuple(variables))
        return RingDescriptor(names, self.prime, order or self.order)

    def rename(self, mapping):
        return RingDescriptor([mapping.get(v, v) for v in self.variables],
            self.prime, self.order)

    def monomials(self, degree):
        """Return the exponent vectors of total degree `degree`, in
        descending order.
        """
        try:
            return self._monomials[degree]
        except KeyError:
            pass
        n = self.nvars
        out = []
        for combo in itertools.combinations_with_replacement(range(n), degree):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        out.sort(key=self.order.key, reverse=True)
        self._monomials[degree] = out
        return out

    def header(self):
        return "ring p=%s vars=%s order=%s"\
            % (self.prime, ','.join(self.variables), self.order)

    @classmethod
    def parse_header(cls, line, prime=None):
        """Parse a ``ring p=<prime> vars=<v1,...> order=<...>`` line.
        A given `prime` overrides the one in the header.
        """
        fields = line.split()
        if not fields or fields[0] != 'ring':
            raise ParseError("expected a ring header", position=0, text=line)
        params = {}
        for item in fields[1:]:
            key, sep, value = item.partition('=')
            if not sep:
                raise ParseError("malformed header field %r" % item,
                    position=line.find(item), text=line)
            params[key] = value
        if 'vars' not in params:
            raise ParseError("ring header without vars", position=0, text=line)
        order = MonomialOrder.parse(params.get('order', 'grevlex'))
        return cls(params['vars'], prime or int(params.get('p', DEFAULT_PRIME)), order)

    def __eq__(self, other):
        return isinstance(other, RingDescriptor) and self.prime == other.prime\
            and self.variables == other.variables and self.order == other.order

    def __hash__(self):
        return hash((self.prime, self.variables, self.order))

    def compatible(self, other):
        """True if polynomials of `other` can be combined with ours."""
        return self.prime == other.prime and self.variables == other.variables

    def same_shape(self, other):
        """True if `other` has our modulus and variable count, so that its
        variables can be identified with ours by position.
        """
        return self.prime == other.prime and self.nvars == other.nvars

    def __repr__(self):
        return "RingDescriptor(%s)" % self.header()
