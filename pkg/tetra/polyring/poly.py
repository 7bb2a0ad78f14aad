"""Sparse multivariate polynomials over F_p.

A :class:`Polynomial` maps exponent tuples to nonzero residues in
``[0, p)``. Instances are immutable by convention: every operation
returns a new polynomial and never mutates ``terms``.
"""
from tetra.modfield import FieldScalar
from tetra.modfield import inverse_mod
from tetra.polyring.exc import LengthMismatch
from tetra.polyring.exc import RingMismatch
from tetra.polyring.exc import UnknownVariable


def monomial_mul(a, b):
    return tuple([x + y for x, y in zip(a, b)])


def monomial_div(a, b):
    """Return a / b, or None if b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def monomial_divides(b, a):
    for x, y in zip(a, b):
        if x < y:
            return False
    return True


def monomial_lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


class Polynomial(object):
    __slots__ = ('ring', 'terms', '_lead')

    def __init__(self, ring, terms=None, check=True):
        self.ring = ring
        self._lead = None
        if not check:
            self.terms = terms if terms is not None else {}
            return
        p = ring.p
        n = ring.nvars
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n:
                raise LengthMismatch("exponent %s does not fit %s variables" % (m, n))
            c = int(c) % p
            if c:
                clean[m] = c
        self.terms = clean

    # Queries

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1
            and not any(next(iter(self.terms))))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def min_degree(self):
        if not self.terms:
            return -1
        return min(sum(m) for m in self.terms)

    def degree_in(self, var):
        i = self.ring.index(var)
        return max((m[i] for m in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def variables_used(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return sorted(used)

    def lead_monomial(self, order=None):
        if order is None or order == self.ring.order:
            if self._lead is None:
                self._lead = max(self.terms, key=self.ring.order.key)
            return self._lead
        return max(self.terms, key=order.key)

    def lead_coeff(self, order=None):
        return self.terms[self.lead_monomial(order)]

    def sorted_terms(self, order=None):
        """Terms as ``(monomial, coeff)`` pairs in descending order."""
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def coefficient(self, monomial):
        return FieldScalar(self.terms.get(tuple(monomial), 0), self.ring.p)

    def homogeneous_component(self, degree):
        return Polynomial(self.ring,
            {m: c for m, c in self.terms.items() if sum(m) == degree}, check=False)

    def lowest_form(self):
        """Return the homogeneous component of minimal total degree."""
        if not self.terms:
            raise ValueError("the zero polynomial has no lowest form")
        return self.homogeneous_component(self.min_degree())

    # Arithmetic

    def _other(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and not self.ring.compatible(other.ring):
                raise RingMismatch("%r and %r" % (self.ring, other.ring))
            return other
        if isinstance(other, (int, FieldScalar)):
            return self.ring.const(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = (terms.get(m, 0) + c) % p
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms, check=False)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()}, check=False)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c):
        p = self.ring.p
        c = int(c) % p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring,
            {m: (v * c) % p for m, v in self.terms.items()}, check=False)

    def mul_term(self, monomial, coeff=1):
        p = self.ring.p
        coeff = int(coeff) % p
        if not coeff:
            return self.ring.zero()
        return Polynomial(self.ring,
            {monomial_mul(m, monomial): (c * coeff) % p for m, c in self.terms.items()},
            check=False)

    def __mul__(self, other):
        if isinstance(other, (int, FieldScalar)):
            return self.scale(int(other))
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        terms = {}
        get = terms.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple([x + y for x, y in zip(m1, m2)])
                terms[m] = (get(m, 0) + c1 * c2) % p
        return Polynomial(self.ring, {m: c for m, c in terms.items() if c}, check=False)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert n >= 0
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self, order=None):
        if not self.terms:
            return self
        return self.scale(inverse_mod(self.lead_coeff(order), self.ring.p))

    def diff(self, var):
        i = self.ring.index(var)
        p = self.ring.p
        terms = {}
        for m, c in self.terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                v = (c * m[i]) % p
                if v:
                    terms[tuple(e)] = v
        return Polynomial(self.ring, terms, check=False)

    # Evaluation and substitution

    def evaluate(self, point):
        """Evaluate at a sequence of residues, one per variable."""
        point = [int(x) for x in point]
        if len(point) != self.ring.nvars:
            raise LengthMismatch("%s values for %s variables"
                % (len(point), self.ring.nvars))
        p = self.ring.p
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = (v * pow(x, e, p)) % p
            total += v
        return total % p

    def substitute(self, mapping):
        """Partially evaluate: `mapping` sends variable names (or
        positions) to residues.
        """
        p = self.ring.p
        values = {self.ring.index(k): int(v) % p for k, v in mapping.items()}
        terms = {}
        for m, c in self.terms.items():
            e = list(m)
            for i, x in values.items():
                if e[i]:
                    c = (c * pow(x, e[i], p)) % p
                    e[i] = 0
            if c:
                key = tuple(e)
                terms[key] = (terms.get(key, 0) + c) % p
        return Polynomial(self.ring, {m: c for m, c in terms.items() if c}, check=False)

    def set_ring(self, ring):
        """Move into `ring`, matching variables by name. Every variable
        that occurs must exist in `ring`.
        """
        if ring is self.ring:
            return self
        if ring.prime != self.ring.prime:
            raise RingMismatch("moduli differ: %s != %s" % (self.ring.prime, ring.prime))
        used = self.variables_used()
        positions = {}
        for i in used:
            name = self.ring.variables[i]
            if name not in ring:
                raise UnknownVariable(name)
            positions[i] = ring.index(name)
        n = ring.nvars
        terms = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, j in positions.items():
                e[j] = m[i]
            terms[tuple(e)] = c
        return Polynomial(ring, terms, check=False)

    def relabel(self, ring):
        """Move into a ring of the same size, identifying variables by
        position.
        """
        if ring is self.ring:
            return self
        if not self.ring.same_shape(ring):
            raise RingMismatch("cannot identify %r with %r" % (self.ring, ring))
        return Polynomial(ring, dict(self.terms), check=False)

    def identify(self, ring):
        """Move into `ring` by name when every occurring variable exists
        there, and by position otherwise.
        """
        names = self.ring.variables
        if all(names[i] in ring for i in self.variables_used()):
            return self.set_ring(ring)
        return self.relabel(ring)

    def homogenize(self, var):
        i = self.ring.index(var)
        if any(m[i] for m in self.terms):
            raise ValueError("%s already occurs in the polynomial" % var)
        d = self.degree()
        terms = {}
        for m, c in self.terms.items():
            e = list(m)
            e[i] = d - sum(m)
            terms[tuple(e)] = c
        return Polynomial(self.ring, terms, check=False)

    def dehomogenize(self, var):
        return self.substitute({var: 1})

    # Comparison and printing

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.compatible(other.ring) and self.terms == other.terms
        if isinstance(other, (int, FieldScalar)):
            return self == self.ring.const(int(other))
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.ring.variables, frozenset(self.terms.items())))

    def __str__(self):
        from tetra.polyring.parse import format_poly
        return format_poly(self)

    def __repr__(self):
        return "Polynomial(%s)" % self
