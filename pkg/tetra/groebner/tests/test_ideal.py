import unittest

import numpy as np

from tetra.groebner import Ideal
from tetra.groebner import contains
from tetra.groebner import eliminate
from tetra.groebner import intersect
from tetra.groebner import irrelevant_ideal
from tetra.groebner import linear_span_ideal
from tetra.groebner import point_ideal
from tetra.groebner import quotient
from tetra.groebner import saturate
from tetra.groebner.exc import InvalidBlock
from tetra.groebner.exc import ZeroIdeal
from tetra.polyring import RingDescriptor
from tetra.polyring import apply_ring_map
from tetra.polyring import parse_poly
from tetra.polyring.tests.base import P
from tetra.polyring.tests.base import random_poly


def ideal(ring, *texts):
    return Ideal(ring, [parse_poly(t, ring) for t in texts])


class IdealTestCase(unittest.TestCase):

    def setUp(self):
        self.ring = RingDescriptor('x,y,z', P)

    def test_contains(self):
        I = ideal(self.ring, 'x*y', 'z^2')
        self.assertTrue(contains(I, I))
        self.assertFalse(contains(ideal(self.ring, 'y'), ideal(self.ring, 'x')))
        self.assertTrue(contains(ideal(self.ring, 'x'), ideal(self.ring, 'x*y+x^2')))

    def test_equality_ignores_presentation(self):
        self.assertEqual(ideal(self.ring, 'x-y', 'y-z'), ideal(self.ring, 'x-z', 'x-y'))
        self.assertNotEqual(ideal(self.ring, 'x'), ideal(self.ring, 'y'))

    def test_hash_key_is_stable(self):
        a = ideal(self.ring, 'x-y', 'y-z')
        b = ideal(self.ring, 'y-z', 'x-z')
        self.assertEqual(a.hash_key(), b.hash_key())
        self.assertEqual(len(a.hash_key()), 64)

    def test_sum_and_product(self):
        I = ideal(self.ring, 'x')
        J = ideal(self.ring, 'y')
        self.assertEqual(I + J, ideal(self.ring, 'y', 'x'))
        self.assertEqual(I * J, ideal(self.ring, 'x*y'))

    def test_point_and_span(self):
        pt = point_ideal(self.ring, (1, 2, 3))
        self.assertEqual(len(pt), 2)
        for g in pt:
            self.assertEqual(g.evaluate((1, 2, 3)), 0)
        line = linear_span_ideal(self.ring, [(1, 0, 0), (0, 1, 0)])
        self.assertEqual(line, ideal(self.ring, 'z'))


class EliminationTestCase(unittest.TestCase):

    def setUp(self):
        self.ring = RingDescriptor('x,y,z', P)

    def test_nothing(self):
        I = ideal(self.ring, 'x*y-z')
        self.assertIs(eliminate(I, []), I)

    def test_twisted_cubic(self):
        I = ideal(self.ring, 'y-x^2', 'z-x^3')
        E = eliminate(I, ['x'])
        self.assertEqual(E.ring.variables, ('y', 'z'))
        self.assertTrue(E.contains_poly(parse_poly('z^2-y^3', E.ring)))
        line = RingDescriptor('x', P)
        x = line.gen('x')
        for g in E:
            self.assertTrue(apply_ring_map([x ** 2, x ** 3], g).is_zero())

    def test_soundness(self):
        I = ideal(self.ring, 'x^2-y*z', 'x*y-z^2')
        E = eliminate(I, ['x'])
        for g in E:
            self.assertTrue(I.contains_poly(g.set_ring(self.ring)))

    def test_unknown_block(self):
        with self.assertRaises(InvalidBlock):
            eliminate(ideal(self.ring, 'x'), ['w'])


class SaturationTestCase(unittest.TestCase):

    def setUp(self):
        self.ring = RingDescriptor('x,y,z', P)
        self.rng = np.random.default_rng(37)

    def test_monomial(self):
        self.assertEqual(saturate(ideal(self.ring, 'x^2*y'), ideal(self.ring, 'x')),
            ideal(self.ring, 'y'))

    def test_inhomogeneous(self):
        self.assertEqual(saturate(ideal(self.ring, 'x^2*y+x^2'), ideal(self.ring, 'x')),
            ideal(self.ring, 'y+1'))

    def test_linear_form(self):
        I = ideal(self.ring, 'x*z+y*z')
        self.assertEqual(saturate(I, ideal(self.ring, 'x+y')), ideal(self.ring, 'z'))

    def test_unit(self):
        I = ideal(self.ring, 'x*y', 'z^3')
        self.assertEqual(saturate(I, ideal(self.ring, '1')), I)

    def test_zero(self):
        with self.assertRaises(ZeroIdeal):
            saturate(ideal(self.ring, 'x'), Ideal(self.ring, []))

    def test_irrelevant_component_is_removed(self):
        # a line with an embedded component supported on the irrelevant ideal
        I = ideal(self.ring, 'x^2', 'x*y', 'x*z')
        sat = saturate(I, irrelevant_ideal(self.ring))
        self.assertEqual(sat, ideal(self.ring, 'x'))

    def test_idempotent(self):
        J = irrelevant_ideal(self.ring)
        for _ in range(10):
            gens = [random_poly(self.rng, self.ring, degree=2, terms=3, homogeneous=True)
                for _ in range(2)]
            once = saturate(Ideal(self.ring, gens), J)
            self.assertEqual(saturate(once, J), once)

    def test_irrelevant_saturates_to_unit(self):
        sat = saturate(irrelevant_ideal(self.ring), irrelevant_ideal(self.ring))
        self.assertTrue(sat.is_unit())


class ColonTestCase(unittest.TestCase):

    def setUp(self):
        self.ring = RingDescriptor('x,y,z', P)

    def test_intersection(self):
        self.assertEqual(intersect(ideal(self.ring, 'x'), ideal(self.ring, 'y')),
            ideal(self.ring, 'x*y'))

    def test_intersection_shortcut(self):
        I = ideal(self.ring, 'x')
        J = ideal(self.ring, 'x*y', 'x*z')
        self.assertIs(intersect(I, J), J)

    def test_quotient(self):
        self.assertEqual(quotient(ideal(self.ring, 'x*y', 'x*z'), ideal(self.ring, 'x')),
            ideal(self.ring, 'y', 'z'))
