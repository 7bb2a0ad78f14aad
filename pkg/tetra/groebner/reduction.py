"""Multivariate division over F_p.

Working polynomials are plain ``{monomial: coeff}`` dicts; divisors are
monic and are given as ``(lead, tail)`` pairs where `tail` holds the
remaining terms. Terms are processed largest first from a heap keyed by
the negated order key.
"""
import heapq

from tetra.polyring import Polynomial
from tetra.polyring.exc import RingMismatch
from tetra.polyring.poly import monomial_div


def _neg(key):
    return tuple([-x for x in key])


def divisor(g):
    """Split a monic polynomial into ``(lead, tail)``."""
    lead = g.lead_monomial()
    return lead, [(m, c) for m, c in g.terms.items() if m != lead]


def reduce_terms(terms, divisors, key, p):
    """Fully reduce `terms` by `divisors` and return the remainder."""
    if not divisors:
        return dict(terms)
    work = dict(terms)
    heap = [(_neg(key(m)), m) for m in work]
    heapq.heapify(heap)
    queued = set(work)
    rest = {}
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = work.pop(m, 0)
        if not c:
            continue
        for lead, tail in divisors:
            q = monomial_div(m, lead)
            if q is not None:
                break
        else:
            rest[m] = c
            continue
        for tm, tc in tail:
            mm = tuple([a + b for a, b in zip(tm, q)])
            v = (work.get(mm, 0) - c * tc) % p
            if v:
                work[mm] = v
                if mm not in queued:
                    queued.add(mm)
                    heapq.heappush(heap, (_neg(key(mm)), mm))
            else:
                work.pop(mm, None)
    return rest


def reduce_poly(f, basis):
    """Remainder of `f` on division by the monic polynomials `basis`,
    all in the ring of `f`.
    """
    if not f or not basis:
        return f
    ring = f.ring
    divisors = [divisor(g) for g in basis]
    rest = reduce_terms(f.terms, divisors, ring.order.key, ring.p)
    return Polynomial(ring, rest, check=False)


def normal_form(f, G):
    """Reduce `f` modulo `G`, a :class:`GroebnerBasis` or a list of
    polynomials. The result has no term divisible by a lead term of
    `G`; it is zero iff ``f`` lies in the ideal when `G` is a Gröbner
    basis.
    """
    elements = list(G)
    ring = getattr(G, 'ring', None) or (elements[0].ring if elements else f.ring)
    if not f.ring.compatible(ring):
        raise RingMismatch("%r and %r" % (f.ring, ring))
    f = Polynomial(ring, f.terms, check=False)
    return reduce_poly(f, [g.set_ring(ring).monic() for g in elements])


def divide_exact(f, g):
    """Return ``f / g``; `g` must divide `f`."""
    ring = f.ring
    g = g.set_ring(ring)
    p = ring.p
    key = ring.order.key
    lead = g.lead_monomial()
    inv = pow(g.terms[lead], p - 2, p)
    work = dict(f.terms)
    quotient = {}
    while work:
        m = max(work, key=key)
        q = monomial_div(m, lead)
        if q is None:
            raise ValueError("%s does not divide %s" % (g, f))
        c = (work[m] * inv) % p
        quotient[q] = c
        for gm, gc in g.terms.items():
            mm = tuple([a + b for a, b in zip(gm, q)])
            v = (work.get(mm, 0) - c * gc) % p
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return Polynomial(ring, quotient, check=False)
