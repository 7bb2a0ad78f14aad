import unittest

from tetra.groebner import Ideal
from tetra.groebner import irrelevant_ideal
from tetra.groebner import point_ideal
from tetra.groebner import rational_points_zero_dim
from tetra.groebner import univariate_roots
from tetra.groebner.exc import PositiveDimensional
from tetra.polyring import RingDescriptor
from tetra.polyring import parse_poly
from tetra.polyring.tests.base import P


class RationalPointsTestCase(unittest.TestCase):

    def setUp(self):
        self.ring = RingDescriptor('x_0..x_2', P)

    def test_coordinate_point(self):
        I = Ideal(self.ring, [self.ring.gen('x_0'), self.ring.gen('x_1')])
        self.assertEqual(list(rational_points_zero_dim(I)), [(0, 0, 1)])

    def test_irrelevant(self):
        points = rational_points_zero_dim(irrelevant_ideal(self.ring))
        self.assertEqual(list(points), [])
        self.assertTrue(points.complete)

    def test_three_points(self):
        expected = [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
        I = point_ideal(self.ring, expected[0])
        for pt in expected[1:]:
            I = I.intersect(point_ideal(self.ring, pt))
        points = rational_points_zero_dim(I)
        self.assertEqual(list(points), expected)
        for pt in points:
            for g in I:
                self.assertEqual(g.evaluate(pt), 0)

    def test_points_are_canonical(self):
        I = point_ideal(self.ring, (3, 6, 9))
        self.assertEqual(list(rational_points_zero_dim(I)), [(1, 2, 3)])

    def test_positive_dimensional(self):
        with self.assertRaises(PositiveDimensional):
            rational_points_zero_dim(Ideal(self.ring, [self.ring.gen('x_0')]))

    def test_non_split_points_are_flagged(self):
        # -1 is not a square modulo 10000019
        ring = RingDescriptor('x', P)
        points = rational_points_zero_dim(Ideal(ring, [parse_poly('x^2+1', ring)]))
        self.assertEqual(list(points), [])
        self.assertEqual(points.unresolved, 2)

    def test_affine(self):
        ring = RingDescriptor('x,y', P)
        I = Ideal(ring, [parse_poly('x^2-1', ring), parse_poly('y-x', ring)])
        self.assertEqual(list(rational_points_zero_dim(I)), [(1, 1), (P - 1, P - 1)])


class UnivariateRootsTestCase(unittest.TestCase):

    def test_split(self):
        self.assertEqual(univariate_roots([1, -3, 2], P), ([1, 2], 0))

    def test_repeated_roots_count_once(self):
        # (x - 5)^2 (x^2 + 1)
        self.assertEqual(univariate_roots([1, -10, 26, -10, 25], P), ([5], 2))

    def test_constant(self):
        self.assertEqual(univariate_roots([7], P), ([], 0))
