"""F_p-rational points of zero-dimensional ideals."""
import logging

from sympy.polys import galoistools as gt
from sympy.polys.domains import ZZ

from tetra.polyring import LEX
from tetra.polyring import apply_ring_map
from tetra.groebner.exc import PositiveDimensional
from tetra.groebner.ideal import Ideal


logger = logging.getLogger('tetra.groebner')


class PointList(list):
    """Points as tuples of residues. `unresolved` counts the roots of
    eliminants that are not defined over F_p.
    """

    def __init__(self, points=(), unresolved=0):
        super(PointList, self).__init__(points)
        self.unresolved = unresolved

    @property
    def complete(self):
        return self.unresolved == 0


def univariate_roots(coeffs, p):
    """Roots in F_p of the polynomial with coefficients `coeffs`
    (highest degree first), and the number of distinct roots that lie
    outside F_p.
    """
    f = gt.gf_strip([int(c) % p for c in coeffs])
    if gt.gf_degree(f) < 1:
        return [], 0
    f = gt.gf_monic(f, p, ZZ)[1]
    sqf = gt.gf_sqf_part(f, p, ZZ)
    xp = gt.gf_pow_mod([ZZ(1), ZZ(0)], p, sqf, p, ZZ)
    split = gt.gf_gcd(sqf, gt.gf_sub(xp, [ZZ(1), ZZ(0)], p, ZZ), p, ZZ)
    roots = []
    if gt.gf_degree(split) > 0:
        _, factors = gt.gf_factor_sqf(split, p, ZZ)
        roots = sorted(int(-fac[1]) % p for fac in factors)
    return roots, gt.gf_degree(sqf) - len(roots)


def _affine_points(gens, ring):
    if ring.nvars == 0:
        return ([()] if all(not g for g in gens) else []), 0
    gb = Ideal(ring, gens).groebner(LEX)
    if gb.is_unit():
        return [], 0
    leads = gb.lead_monomials()
    for i in range(ring.nvars):
        if not any(m[i] and m[i] == sum(m) for m in leads):
            raise PositiveDimensional("no pure power of %s among the lead terms"
                % ring.variables[i])
    last = ring.nvars - 1
    f = next(g for g in gb if all(not any(m[:last]) for m in g.terms))
    coeffs = [0] * (f.degree() + 1)
    for m, c in f.terms.items():
        coeffs[len(coeffs) - 1 - m[last]] = c
    roots, unresolved = univariate_roots(coeffs, ring.p)
    rest = ring.sub(ring.variables[:last], LEX)
    points = []
    for r in roots:
        sub = [g.substitute({last: r}).set_ring(rest) for g in gb]
        found, missing = _affine_points(sub, rest)
        unresolved += missing
        points.extend(pt + (r,) for pt in found)
    return points, unresolved


def rational_points_zero_dim(I):
    """All F_p-rational points of ``V(I)``.

    Homogeneous ideals give projective points, scaled so the first
    nonzero coordinate is 1; other ideals give affine points. The
    result is a sorted :class:`PointList`.
    """
    ring = I.ring
    if not I.homogeneous:
        local = ring.with_order(LEX)
        points, unresolved = _affine_points([g.set_ring(local) for g in I.generators], local)
        return PointList(sorted(points), unresolved)
    points, unresolved = [], 0
    n = ring.nvars
    for i in range(n):
        chart = ring.sub(ring.variables[i + 1:], LEX)
        images = [chart.zero()] * i + [chart.one()] + chart.gens
        gens = [apply_ring_map(images, g) for g in I.generators]
        found, missing = _affine_points(gens, chart)
        unresolved += missing
        points.extend((0,) * i + (1,) + pt for pt in found)
    logger.debug("Found %s rational points (%s unresolved)", len(points), unresolved)
    return PointList(sorted(points), unresolved)
