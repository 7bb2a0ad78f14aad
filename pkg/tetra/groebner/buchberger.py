"""Reduced Gröbner bases by Buchberger's algorithm with the
Gebauer-Möller criteria and the normal selection strategy (pairs with
the smallest lcm first), as in Becker and Weispfenning, page 232.
"""
import itertools
import logging

from tetra.polyring import Polynomial
from tetra.polyring import format_poly
from tetra.polyring.poly import monomial_div
from tetra.polyring.poly import monomial_lcm
from tetra.polyring.poly import monomial_mul
from tetra.groebner.reduction import divisor
from tetra.groebner.reduction import reduce_terms


logger = logging.getLogger('tetra.groebner')


def spoly(p1, p2):
    """S-polynomial of two monic polynomials."""
    lm1 = p1.lead_monomial()
    lm2 = p2.lead_monomial()
    lcm = monomial_lcm(lm1, lm2)
    return p1.mul_term(monomial_div(lcm, lm1)) - p2.mul_term(monomial_div(lcm, lm2))


def buchberger(polys, ring):
    """Return the reduced Gröbner basis of `polys` for ``ring.order``,
    as a list of monic polynomials sorted by decreasing lead monomial.
    """
    key = ring.order.key
    p = ring.p
    f = [Polynomial(ring, g.terms, check=False).monic() for g in polys if g]
    if not f:
        return []
    if any(g.is_constant() for g in f):
        return [ring.one()]

    divisors = {}

    def rem(g, indices):
        basis = []
        for i in indices:
            if i not in divisors:
                divisors[i] = divisor(f[i])
            basis.append(divisors[i])
        return Polynomial(ring, reduce_terms(g.terms, basis, key, p), check=False)

    # interreduce the input
    f1 = f[:]
    while True:
        f = f1[:]
        f1 = []
        divisors.clear()
        for i in range(len(f)):
            r = rem(f[i], range(i))
            if r:
                f1.append(r.monic())
        if f == f1:
            break
    divisors.clear()
    if any(g.is_constant() for g in f):
        return [ring.one()]

    index = {}
    lm = []

    def normal(g, J):
        h = rem(g, J)
        if not h:
            return None
        h = h.monic()
        if h not in index:
            index[h] = len(f)
            f.append(h)
            lm.append(h.lead_monomial())
        return index[h]

    def update(G, B, ih):
        mh = lm[ih]
        C = set(G)
        D = set()
        while C:
            ig = C.pop()
            mg = lm[ig]
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip):
                return monomial_div(lcm_hg, monomial_lcm(mh, lm[ip])) is not None

            if monomial_mul(mh, mg) == lcm_hg or (
                    not any(lcm_divides(ipx) for ipx in C) and
                    not any(lcm_divides(pr[1]) for pr in D)):
                D.add((ih, ig))
        E = set()
        while D:
            ih, ig = D.pop()
            mg = lm[ig]
            if monomial_mul(mh, mg) != monomial_lcm(mh, mg):
                E.add((ih, ig))
        B_new = set()
        while B:
            ig1, ig2 = B.pop()
            mg1, mg2 = lm[ig1], lm[ig2]
            lcm12 = monomial_lcm(mg1, mg2)
            if monomial_div(lcm12, mh) is None or\
                    monomial_lcm(mg1, mh) == lcm12 or\
                    monomial_lcm(mg2, mh) == lcm12:
                B_new.add((ig1, ig2))
        B_new |= E
        G_new = set(ig for ig in G if monomial_div(lm[ig], mh) is None)
        G_new.add(ih)
        return G_new, B_new

    for i, h in enumerate(f):
        index[h] = i
        lm.append(h.lead_monomial())

    F = set(range(len(f)))
    G = set()
    CP = set()
    while F:
        ih = min(F, key=lambda i: key(lm[i]))
        F.remove(ih)
        G, CP = update(G, CP, ih)

    zero_reductions = 0
    while CP:
        pair = min(CP, key=lambda pr: key(monomial_lcm(lm[pr[0]], lm[pr[1]])))
        CP.remove(pair)
        h = spoly(f[pair[0]], f[pair[1]])
        G1 = sorted(G, key=lambda g: key(lm[g]))
        ih = normal(h, G1)
        if ih is None:
            zero_reductions += 1
        else:
            G, CP = update(G, CP, ih)

    reduced = set()
    for ig in G:
        ih = normal(f[ig], sorted(G - {ig}, key=lambda g: key(lm[g])))
        if ih is not None:
            reduced.add(ih)
    result = sorted((f[i] for i in reduced), key=lambda g: key(g.lead_monomial()),
        reverse=True)
    logger.debug("Gröbner basis in %s variables (order: %s, size: %s,"
        " zero reductions: %s)", ring.nvars, ring.order, len(result), zero_reductions)
    return result


class GroebnerBasis(object):
    """A reduced Gröbner basis: monic elements sorted by decreasing
    lead monomial under ``ring.order``.
    """

    def __init__(self, ring, elements):
        self.ring = ring
        self.order = ring.order
        self.elements = list(elements)
        self._divisors = None

    @classmethod
    def compute(cls, ring, polys):
        return cls(ring, buchberger(polys, ring))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def lead_monomials(self):
        return [g.lead_monomial() for g in self.elements]

    def is_unit(self):
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def reduce(self, f):
        """Normal form of `f` (which must share our variables)."""
        f = Polynomial(self.ring, f.terms, check=False)
        if self._divisors is None:
            self._divisors = [divisor(g) for g in self.elements]
        return Polynomial(self.ring,
            reduce_terms(f.terms, self._divisors, self.order.key, self.ring.p),
            check=False)

    def contains(self, f):
        return not self.reduce(f)

    def verify(self):
        """Check the Buchberger criterion: every S-polynomial of the
        elements reduces to zero.
        """
        for g1, g2 in itertools.combinations(self.elements, 2):
            if self.reduce(spoly(g1, g2)):
                return False
        return True

    def is_reduced(self):
        leads = self.lead_monomials()
        for i, g in enumerate(self.elements):
            if g.lead_coeff() != 1:
                return False
            for j, lead in enumerate(leads):
                if i != j and any(monomial_div(m, lead) is not None for m in g.terms):
                    return False
        return True

    def text(self):
        lines = [self.ring.header()]
        lines.extend(format_poly(g) for g in self.elements)
        return '\n'.join(lines) + '\n'

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis)\
            and self.ring.compatible(other.ring) and self.order == other.order\
            and [g.terms for g in self] == [g.terms for g in other]

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "GroebnerBasis(%s elements, order=%s)" % (len(self), self.order)
