"""Brute-force linear-algebra checks used to cross-examine the
Gröbner engine in tests.
"""
from tetra.modfield import FMatrix
from tetra.polyring import Polynomial


def _columns(ring, degree):
    columns = []
    for d in range(degree + 1):
        columns.extend(ring.monomials(d))
    return columns, {m: j for j, m in enumerate(columns)}


def _multiples(gens, degree):
    ring = gens[0].ring
    for g in gens:
        top = g.degree()
        for d in range(degree - top + 1):
            for m in ring.monomials(d):
                yield g.mul_term(m)


def _matrix(polys, ring, position):
    rows = []
    for f in polys:
        row = [0] * len(position)
        for m, c in f.terms.items():
            row[position[m]] = c
        rows.append(row)
    return FMatrix.from_rows(rows, ring.prime, cols=len(position))


def truncated_membership(f, gens, degree):
    """True if `f` is a combination ``sum(a_i g_i)`` with every
    ``deg(a_i g_i) <= degree``.
    """
    if not f:
        return True
    if f.degree() > degree or not gens:
        return False
    ring = gens[0].ring
    columns, position = _columns(ring, degree)
    span = _matrix(list(_multiples(gens, degree)), ring, position)
    both = span.vstack(_matrix([f.set_ring(ring)], ring, position))
    return span.rank() == both.rank()


def lowest_forms_up_to(gens, degree):
    """Lowest forms of the elements of ``(gens)`` of representation
    degree at most `degree`, as ``{d: [forms]}``; the forms of each
    degree are linearly independent.
    """
    if not gens:
        return {}
    ring = gens[0].ring
    columns, position = _columns(ring, degree)
    polys = list(_multiples(gens, degree))
    if not polys:
        return {}
    reduced, rank, _ = _matrix(polys, ring, position).row_reduce()
    out = {}
    for row in reduced.tolist()[:rank]:
        lead = next(j for j, c in enumerate(row) if c)
        d = sum(columns[lead])
        terms = {columns[j]: c for j, c in enumerate(row) if c and sum(columns[j]) == d}
        out.setdefault(d, []).append(Polynomial(ring, terms))
    return out
