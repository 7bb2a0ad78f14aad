"""Elimination, intersection, colon ideals and saturation."""
import logging

from tetra.modfield import inverse_mod
from tetra.polyring import GREVLEX
from tetra.polyring import MonomialOrder
from tetra.polyring import Polynomial
from tetra.polyring import RingDescriptor
from tetra.polyring import apply_ring_map
from tetra.polyring.exc import RingMismatch
from tetra.polyring.exc import UnknownVariable
from tetra.groebner.exc import InvalidBlock
from tetra.groebner.exc import ZeroIdeal
from tetra.groebner.ideal import Ideal
from tetra.groebner.reduction import divide_exact


logger = logging.getLogger('tetra.groebner')


def fresh_variable(ring, base='u'):
    """A variable name that does not occur in `ring`."""
    name, i = base, 0
    while name in ring:
        name = '%s%s' % (base, i)
        i += 1
    return name


def _plain_order(ring):
    return ring.order if ring.order.kind in ('grevlex', 'lex') else GREVLEX


def _eliminate_into(generators, block, rest, prime, target):
    work = RingDescriptor(list(block) + list(rest), prime,
        MonomialOrder.elimination(len(block)))
    gb = Ideal(work, generators).groebner()
    k = len(block)
    keep = [g for g in gb if not any(any(m[:k]) for m in g.terms)]
    logger.debug("Eliminated %s of %s variables (%s of %s basis elements kept)",
        k, work.nvars, len(keep), len(gb))
    return Ideal(target, [g.set_ring(target) for g in keep])


def eliminate(I, block):
    """Return ``I ∩ F_p[rest]`` where `rest` are the variables not in
    `block`, computed from a block elimination order.
    """
    ring = I.ring
    names = []
    for var in block:
        try:
            names.append(ring.variables[ring.index(var)])
        except UnknownVariable:
            raise InvalidBlock(var)
    if not names:
        return I
    rest = [v for v in ring.variables if v not in names]
    target = RingDescriptor(rest, ring.prime, _plain_order(ring))
    return _eliminate_into(I.generators, names, rest, ring.prime, target)


def intersect(I, J):
    """``I ∩ J`` as the elimination of t from ``t·I + (1 - t)·J``."""
    if not I.ring.compatible(J.ring):
        raise RingMismatch("%r and %r" % (I.ring, J.ring))
    if I.contains(J):
        return J
    if J.contains(I):
        return I
    ring = I.ring
    t = fresh_variable(ring, 't')
    work = ring.extend([t], front=True, order=MonomialOrder.elimination(1))
    tv = work.gen(t)
    gens = [tv * g.set_ring(work) for g in I.generators]
    gens.extend((1 - tv) * g.set_ring(work) for g in J.generators)
    return _eliminate_into(gens, [t], ring.variables, ring.prime, ring)


def quotient(I, J):
    """The colon ideal ``I : J``."""
    if not I.ring.compatible(J.ring):
        raise RingMismatch("%r and %r" % (I.ring, J.ring))
    result = None
    for g in J.generators:
        g = g.set_ring(I.ring)
        meet = intersect(I, Ideal(I.ring, [g]))
        part = Ideal(I.ring, [divide_exact(h, g) for h in meet.generators])
        result = part if result is None else intersect(result, part)
    return result if result is not None else Ideal(I.ring, [I.ring.one()])


def _saturate_variable(I, j):
    # Bayer: for homogeneous I and grevlex with x_j last, dividing the
    # basis by powers of x_j gives a basis of I : x_j^inf.
    ring = I.ring
    names = [v for i, v in enumerate(ring.variables) if i != j] + [ring.variables[j]]
    work = RingDescriptor(names, ring.prime, GREVLEX)
    gb = Ideal(work, I.generators).groebner()
    last = work.nvars - 1
    out = []
    for g in gb:
        e = min(m[last] for m in g.terms)
        if e:
            g = Polynomial(work, {m[:last] + (m[last] - e,): c for m, c in g.terms.items()},
                check=False)
        out.append(g.set_ring(ring))
    return Ideal(ring, out)


def _saturate_linear(I, f):
    ring = I.ring
    p = ring.p
    coeffs = [0] * ring.nvars
    for m, c in f.terms.items():
        coeffs[m.index(1)] = c
    j = max(i for i, c in enumerate(coeffs) if c)
    if all(not c for i, c in enumerate(coeffs) if i != j):
        return _saturate_variable(I, j)
    # move f to the coordinate x_j, saturate there, and move back
    gens = ring.gens
    inv = inverse_mod(coeffs[j], p)
    solved = gens[j]
    for i, c in enumerate(coeffs):
        if i != j and c:
            solved = solved - gens[i].scale(c)
    forward = list(gens)
    forward[j] = solved.scale(inv)
    backward = list(gens)
    backward[j] = f
    moved = Ideal(ring, [apply_ring_map(forward, g) for g in I.generators])
    sat = _saturate_variable(moved, j)
    return Ideal(ring, [apply_ring_map(backward, g) for g in sat.generators])


def _saturate_auxiliary(I, f):
    ring = I.ring
    u = fresh_variable(ring, 'u')
    work = ring.extend([u], front=True, order=MonomialOrder.elimination(1))
    gens = [g.set_ring(work) for g in I.generators]
    gens.append(work.gen(u) * f.set_ring(work) - 1)
    return _eliminate_into(gens, [u], ring.variables, ring.prime, ring)


def saturate_element(I, f):
    """``I : f^inf``."""
    f = f.set_ring(I.ring)
    if not f:
        raise ZeroIdeal("cannot saturate by zero")
    if f.is_constant() or not I.generators:
        return I
    if I.homogeneous and f.is_homogeneous():
        if f.degree() == 1:
            return _saturate_linear(I, f)
        if len(f.terms) == 1:
            result = I
            m = next(iter(f.terms))
            for j, e in enumerate(m):
                if e:
                    result = _saturate_variable(result, j)
            return result
    return _saturate_auxiliary(I, f)


def saturate(I, J):
    """The stable colon ``I : J^inf``, as the intersection of the
    saturations by the generators of `J`.
    """
    if not I.ring.compatible(J.ring):
        raise RingMismatch("%r and %r" % (I.ring, J.ring))
    if J.is_zero():
        raise ZeroIdeal("cannot saturate by the zero ideal")
    if any(g.is_constant() for g in J.generators):
        return I
    result = None
    for g in J.generators:
        part = saturate_element(I, g)
        result = part if result is None else intersect(result, part)
    logger.debug("Saturated %s generators by %s (%s generators)",
        len(I.generators), len(J.generators), len(result.generators))
    return result
