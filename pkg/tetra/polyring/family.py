from tetra.modfield import FMatrix
from tetra.polyring.exc import NotParametric
from tetra.polyring.poly import Polynomial
from tetra.polyring.ring import RingDescriptor


class ParametricFamily(object):
    """A linear system of forms written as one generic element that is
    linear in the parameter variables, mirroring a coefficient ring
    ``F_p[l_0..l_13][s_0..s_3]``.

    Args:
        ring: a ring containing both the parameters and the geometric
            variables.
        parameters: the names of the parameter variables, in order.
        generic_element: a :class:`Polynomial` of `ring` that has
            degree exactly one in the parameters and is homogeneous in
            the geometric variables.
    """

    def __init__(self, ring, parameters, generic_element):
        self.ring = ring
        self.parameters = tuple(parameters)
        self.generic_element = generic_element.set_ring(ring)
        pidx = [ring.index(x) for x in self.parameters]
        gidx = [i for i in range(ring.nvars) if i not in set(pidx)]
        self.geometric_ring = RingDescriptor(
            [ring.variables[i] for i in gidx], ring.prime)
        split = {x: {} for x in self.parameters}
        degrees = set()
        for m, c in self.generic_element.terms.items():
            pdeg = [m[i] for i in pidx]
            if sum(pdeg) != 1:
                raise NotParametric("term %s is not linear in the parameters" % (m,))
            name = self.parameters[pdeg.index(1)]
            g = tuple(m[i] for i in gidx)
            degrees.add(sum(g))
            split[name][g] = c
        if len(degrees) > 1:
            raise NotParametric("generic element is not homogeneous in %s"
                % (self.geometric_ring.variables,))
        self.degree = degrees.pop() if degrees else 0
        self._members = [Polynomial(self.geometric_ring, split[x], check=False)
            for x in self.parameters]

    @classmethod
    def from_members(cls, members, parameters):
        """Build the family ``sum(l_i * members[i])``."""
        assert len(members) == len(parameters)
        geometric = members[0].ring
        ring = geometric.extend(parameters, front=True, order=geometric.order)
        generic = ring.zero()
        for name, f in zip(parameters, members):
            generic = generic + ring.gen(name) * f.set_ring(ring)
        return cls(ring, parameters, generic)

    @classmethod
    def from_polynomial(cls, generic, parameters):
        return cls(generic.ring, parameters, generic)

    def substitute_parameters(self, solution):
        """Eliminate parameters: `solution` maps parameter names to
        linear polynomials in the remaining parameters (of our ring).
        Returns the family in the remaining parameters.
        """
        from tetra.polyring.ringmap import apply_ring_map
        images = [solution.get(v, self.ring.gen(v)) for v in self.ring.variables]
        generic = apply_ring_map([g.set_ring(self.ring) for g in images],
            self.generic_element)
        remaining = [x for x in self.parameters if x not in solution]
        ring = self.geometric_ring.extend(remaining, front=True, order=self.ring.order)
        return ParametricFamily(ring, remaining, generic.set_ring(ring))

    def members(self):
        """The member forms, one per parameter, in the geometric ring."""
        return list(self._members)

    def specialize(self, values):
        """Return the member for the parameter values `values`."""
        assert len(values) == len(self.parameters)
        total = self.geometric_ring.zero()
        for v, f in zip(values, self._members):
            total = total + f.scale(int(v))
        return total

    def coefficient_matrix(self):
        """Return ``(monomials, matrix)`` with one row per member and
        one column per monomial of the family's degree.
        """
        monomials = self.geometric_ring.monomials(self.degree)
        rows = [[f.terms.get(m, 0) for m in monomials] for f in self._members]
        return monomials, FMatrix.from_rows(rows, self.ring.prime, cols=len(monomials))

    @property
    def dimension(self):
        """Projective dimension of the linear span of the members."""
        if not self._members:
            return -1
        return self.coefficient_matrix()[1].rank() - 1

    def span_equals(self, other):
        """True if both families span the same space of forms."""
        if self.degree != other.degree:
            return False
        a = self.coefficient_matrix()[1]
        monomials = self.geometric_ring.monomials(self.degree)
        rows = [[f.set_ring(self.geometric_ring).terms.get(m, 0) for m in monomials]
            for f in other.members()]
        b = FMatrix.from_rows(rows, self.ring.prime, cols=len(monomials))
        ra, rb = a.rank(), b.rank()
        return ra == rb == a.vstack(b).rank()

    def reparametrize(self, vectors, names):
        """Return the subfamily spanned by ``sum_i v[i] * member_i``
        for each vector `v`, with new parameter names `names`.
        """
        assert len(vectors) == len(names)
        members = []
        for v in vectors:
            members.append(self.specialize(v))
        if not members:
            return EmptyFamily(self.geometric_ring, self.degree)
        return ParametricFamily.from_members(members, names)

    def __len__(self):
        return len(self.parameters)

    def __repr__(self):
        return "ParametricFamily(degree=%s, parameters=%s)"\
            % (self.degree, ','.join(self.parameters))


class EmptyFamily(object):
    """The family left over when every parameter has been solved for."""
    parameters = ()
    generic_element = None

    def __init__(self, geometric_ring, degree):
        self.geometric_ring = geometric_ring
        self.degree = degree
        self.dimension = -1

    def members(self):
        return []

    def __len__(self):
        return 0

    def __repr__(self):
        return "EmptyFamily(degree=%s)" % self.degree
