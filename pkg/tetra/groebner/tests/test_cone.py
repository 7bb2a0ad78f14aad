import unittest

import numpy as np

from tetra.groebner import Ideal
from tetra.groebner import lowest_forms_up_to
from tetra.groebner import standard_basis
from tetra.groebner import tangent_cone
from tetra.groebner.exc import PointNotOnVariety
from tetra.modfield import FMatrix
from tetra.polyring import RingDescriptor
from tetra.polyring import parse_poly
from tetra.polyring.tests.base import P
from tetra.polyring.tests.base import random_poly


class TangentConeTestCase(unittest.TestCase):

    def setUp(self):
        self.ring = RingDescriptor('x,y', P)

    def ideal(self, *texts):
        return Ideal(self.ring, [parse_poly(t, self.ring) for t in texts])

    def test_node(self):
        cone = tangent_cone(self.ideal('y^2-x^2-x^3'), (0, 0))
        self.assertEqual(cone, self.ideal('y^2-x^2'))

    def test_smooth_point_gives_tangent_line(self):
        cone = tangent_cone(self.ideal('x^2+y^2-1'), (1, 0))
        self.assertEqual(cone, self.ideal('x'))

    def test_point_off_the_curve(self):
        with self.assertRaises(PointNotOnVariety):
            tangent_cone(self.ideal('x^2+y^2-1'), (0, 0))

    def test_projective_chart(self):
        ring = RingDescriptor('x,y,z', P)
        I = Ideal(ring, [parse_poly('y^2*z-x^2*z-x^3', ring)])
        cone = tangent_cone(I, (0, 0, 5))
        self.assertEqual(cone.ring.variables, ('x', 'y'))
        self.assertEqual(cone, Ideal(cone.ring, [parse_poly('y^2-x^2', cone.ring)]))

    def test_cusp_with_two_generators(self):
        # the cone of (y^2 - x^3, x*y) is (y^2, x*y, x^4): standard basis needed
        cone = tangent_cone(self.ideal('y^2-x^3', 'x*y'), (0, 0))
        self.assertEqual(cone, self.ideal('y^2', 'x*y', 'x^4'))

    def test_standard_basis_spans_the_local_ideal(self):
        I = self.ideal('y^2-x^3', 'x*y')
        for g in standard_basis(I):
            self.assertTrue(I.contains_poly(g))


class ConeOracleTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(43)

    def in_span(self, form, forms):
        ring = form.ring
        columns = {m: j for j, m in enumerate(ring.monomials(form.degree()))}

        def row(f):
            out = [0] * len(columns)
            for m, c in f.terms.items():
                out[columns[m]] = c
            return out

        span = FMatrix.from_rows([row(f) for f in forms], ring.p, cols=len(columns))
        both = span.vstack(FMatrix.from_rows([row(form)], ring.p, cols=len(columns)))
        return span.rank() == both.rank()

    def test_agrees_with_brute_force(self):
        for case in range(50):
            n = 2 + case % 2
            ring = RingDescriptor(['x_%s' % i for i in range(n)], P)
            gens = [random_poly(self.rng, ring, degree=3, terms=3, constant=False)
                for _ in range(1 + case % 2)]
            gens = [g for g in gens if g]
            if not gens:
                continue
            I = Ideal(ring, gens)
            cone = tangent_cone(I, (0,) * n)
            brute = lowest_forms_up_to(gens, 6)
            for forms in brute.values():
                for form in forms:
                    self.assertTrue(cone.contains_poly(form))
            for g in gens:
                self.assertTrue(cone.contains_poly(g.lowest_form()))

            # no cone generator comes from outside the ideal
            basis = standard_basis(I)
            for s in basis:
                self.assertTrue(I.contains_poly(s))
            lowest = [s.lowest_form() for s in basis]
            for g in cone.generators:
                self.assertIn(g, lowest)

            bottom = min(brute)
            for g in cone.generators:
                if g.degree() == bottom:
                    self.assertTrue(self.in_span(g, brute[bottom]))
                self.assertGreaterEqual(g.degree(), bottom)

    def test_homogeneous_ideal_at_the_affine_origin(self):
        ring = RingDescriptor('x,y,z', P)
        for text in ('x+y', 'y^2-x^2', 'x*y*z-z^3'):
            f = parse_poly(text, ring)
            self.assertEqual(tangent_cone(Ideal(ring, [f]), (0, 0, 0)), Ideal(ring, [f]))

    def test_zero_vector_is_not_a_projective_point(self):
        ring = RingDescriptor('x,y,z', P)
        I = Ideal(ring, [parse_poly('y^2-x^2', ring)])
        with self.assertRaises(PointNotOnVariety):
            tangent_cone(I, (0, 0, 0), projective=True)

    def test_principal_cone_matches_lowest_forms(self):
        for _ in range(10):
            ring = RingDescriptor('x,y,z', P)
            f = random_poly(self.rng, ring, degree=4, terms=4, constant=False)
            cone = tangent_cone(Ideal(ring, [f]), (0, 0, 0))
            self.assertEqual(cone, Ideal(ring, [f.lowest_form()]))
            brute = lowest_forms_up_to([f], 6)
            self.assertEqual(min(brute), f.min_degree())
            self.assertEqual(len(brute[f.min_degree()]), 1)
