"""Tangent cones by homogenization.

The local ideal at the origin is homogenized with a new variable h and
a Gröbner basis is taken for the order that compares total degree first
and then the exponent of h. Dehomogenizing gives a standard basis for
the local degree order, and the lowest forms of its elements generate
the tangent cone.
"""
import logging

from tetra.polyring import GREVLEX
from tetra.polyring import MonomialOrder
from tetra.polyring import RingDescriptor
from tetra.polyring import apply_ring_map
from tetra.polyring.exc import LengthMismatch
from tetra.groebner.elimination import fresh_variable
from tetra.groebner.exc import PointNotOnVariety
from tetra.groebner.ideal import Ideal


logger = logging.getLogger('tetra.groebner')


def standard_basis(I):
    """A standard basis of `I` at the origin of its ring."""
    ring = I.ring
    if not I.generators:
        return []
    h = fresh_variable(ring, 'h')
    n = ring.nvars + 1
    order = MonomialOrder.weighted([[1] * n, [1] + [0] * (n - 1)])
    work = ring.extend([h], front=True, order=order)
    gens = [g.set_ring(work).homogenize(h) for g in I.generators]
    gb = Ideal(work, gens).groebner()
    return [g.dehomogenize(h).set_ring(ring) for g in gb]


def _homogeneous_in(I, positions):
    for g in I.generators:
        if len({sum(m[i] for i in positions) for m in g.terms}) > 1:
            return False
    return True


def local_ideal(I, point, variables=None, projective=None):
    """Translate `I` so that `point` becomes the origin.

    `point` gives coordinates for `variables` (default: every ring
    variable); other variables are left alone. For projective input
    (the default when `I` is homogeneous in `variables` and the point is
    not all zero) the chart is the last nonzero coordinate, which is set
    to 1 and dropped. The all-zero point is always the affine origin
    unless `projective` is given explicitly.
    Returns ``(ideal, translated)`` where `translated` names the
    variables that now vanish at the point.
    """
    ring = I.ring
    names = [ring.variables[ring.index(v)] for v in (variables or ring.variables)]
    if len(point) != len(names):
        raise LengthMismatch("%s coordinates for %s variables" % (len(point), len(names)))
    p = ring.p
    point = [int(x) % p for x in point]
    positions = [ring.index(v) for v in names]
    if projective is None:
        projective = any(point) and _homogeneous_in(I, positions)
    coords = dict(zip(names, point))
    chart_var = None
    if projective:
        nonzero = [v for v in names if coords[v]]
        if not nonzero:
            raise PointNotOnVariety("the zero vector is not a projective point")
        chart_var = nonzero[-1]
        scale = pow(coords[chart_var], p - 2, p)
        coords = {v: (a * scale) % p for v, a in coords.items()}
        chart = RingDescriptor([v for v in ring.variables if v != chart_var],
            ring.prime, ring.order if ring.order.kind in ('grevlex', 'lex') else GREVLEX)
    else:
        chart = ring
    images = []
    for v in ring.variables:
        if v == chart_var:
            images.append(chart.one())
        elif v in coords:
            images.append(chart.gen(v) + coords[v])
        else:
            images.append(chart.gen(v))
    translated = [v for v in names if v != chart_var]
    local = Ideal(chart, [apply_ring_map(images, g) for g in I.generators])
    origin = {v: 0 for v in translated}
    for g in local.generators:
        if g.substitute(origin):
            raise PointNotOnVariety("%s does not vanish at %s" % (g, point))
    return local, translated


def tangent_cone(I, point, variables=None, projective=None):
    """The tangent cone of ``V(I)`` at `point`, as a homogeneous ideal
    of the chart ring (see :func:`local_ideal`).

    Variables outside `variables` act as coefficients; lowest forms are
    taken in total degree, so an ideal generated by elements that are
    linear in those coefficients gets its cone in the geometric
    variables.
    """
    local, _ = local_ideal(I, point, variables, projective)
    forms = []
    for g in standard_basis(local):
        form = g.lowest_form()
        if form not in forms:
            forms.append(form)
    logger.debug("Tangent cone with %s generators of degrees %s",
        len(forms), sorted(f.degree() for f in forms))
    return Ideal(local.ring, forms)
