import unittest

from tetra.polyring import ParametricFamily
from tetra.polyring import RingDescriptor
from tetra.polyring import parse_poly
from tetra.polyring.exc import NotParametric
from tetra.polyring.tests.base import P


class ParametricFamilyTestCase(unittest.TestCase):

    def setUp(self):
        self.ring = RingDescriptor('a,b,c,x,y', P)
        self.generic = parse_poly('a*x^2 + b*x*y + c*x^2',
            self.ring)

    def test_members_and_dimension(self):
        family = ParametricFamily(self.ring, ['a', 'b', 'c'], self.generic)
        geo = family.geometric_ring
        self.assertEqual(geo.variables, ('x', 'y'))
        self.assertEqual(family.members(), [
            parse_poly('x^2', geo), parse_poly('x*y', geo), parse_poly('x^2', geo)])
        self.assertEqual(family.degree, 2)
        self.assertEqual(family.dimension, 1)

    def test_specialize(self):
        family = ParametricFamily(self.ring, ['a', 'b', 'c'], self.generic)
        geo = family.geometric_ring
        self.assertEqual(family.specialize([1, 2, 3]), parse_poly('4*x^2+2*x*y', geo))

    def test_rejects_nonlinear_parameters(self):
        with self.assertRaises(NotParametric):
            ParametricFamily(self.ring, ['a', 'b', 'c'], parse_poly('a*b*x^2', self.ring))
        with self.assertRaises(NotParametric):
            ParametricFamily(self.ring, ['a', 'b', 'c'], parse_poly('x^2', self.ring))

    def test_rejects_inhomogeneous_members(self):
        with self.assertRaises(NotParametric):
            ParametricFamily(self.ring, ['a', 'b', 'c'], parse_poly('a*x^2+b*y', self.ring))

    def test_span_equals(self):
        geo = RingDescriptor('x,y', P)
        one = ParametricFamily.from_members(
            [parse_poly('x^2', geo), parse_poly('y^2', geo)], ['a', 'b'])
        two = ParametricFamily.from_members(
            [parse_poly('x^2+y^2', geo), parse_poly('x^2-y^2', geo)], ['c', 'd'])
        three = ParametricFamily.from_members(
            [parse_poly('x^2', geo), parse_poly('x*y', geo)], ['c', 'd'])
        self.assertTrue(one.span_equals(two))
        self.assertFalse(one.span_equals(three))

    def test_reparametrize(self):
        geo = RingDescriptor('x,y', P)
        family = ParametricFamily.from_members(
            [parse_poly('x^2', geo), parse_poly('x*y', geo), parse_poly('y^2', geo)],
            ['l_0', 'l_1', 'l_2'])
        sub = family.reparametrize([(1, 0, P - 1), (0, 1, 0)], ['l_0', 'l_1'])
        self.assertEqual(sub.members(), [parse_poly('x^2-y^2', geo), parse_poly('x*y', geo)])
        self.assertEqual(sub.dimension, 1)

    def test_substitute_parameters(self):
        ring = RingDescriptor('a,b,c,x,y', P)
        family = ParametricFamily.from_polynomial(
            parse_poly('a*x^2 + b*x*y + c*y^2', ring), ['a', 'b', 'c'])
        solved = family.substitute_parameters({'c': parse_poly('a+b', ring)})
        geo = solved.geometric_ring
        self.assertEqual(solved.parameters, ('a', 'b'))
        self.assertEqual(solved.members(),
            [parse_poly('x^2+y^2', geo), parse_poly('x*y+y^2', geo)])
