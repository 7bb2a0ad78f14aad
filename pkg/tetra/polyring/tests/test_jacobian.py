import unittest

from tetra.groebner import Ideal
from tetra.groebner import irrelevant_ideal
from tetra.polyring import RingDescriptor
from tetra.polyring import jacobian
from tetra.polyring import jacobian_minors
from tetra.polyring import minors
from tetra.polyring import parse_poly
from tetra.polyring.exc import LengthMismatch
from tetra.polyring.tests.base import P


class JacobianTestCase(unittest.TestCase):

    def setUp(self):
        self.ring = RingDescriptor('x,y,z', P)

    def parse(self, text):
        return parse_poly(text, self.ring)

    def test_jacobian_entries(self):
        J = jacobian([self.parse('x^2*y + z')])
        self.assertEqual(J, [[self.parse('2*x*y'), self.parse('x^2'), self.ring.one()]])

    def test_sphere(self):
        ideal = jacobian_minors([self.parse('x^2+y^2+z^2')], 1)
        self.assertEqual(set(ideal.generators),
            {self.parse('2*x'), self.parse('2*y'), self.parse('2*z')})
        self.assertEqual(ideal, irrelevant_ideal(self.ring))

    def test_identity_like_matrix(self):
        ring = RingDescriptor('x,y', P)
        ideal = jacobian_minors([parse_poly('x', ring), parse_poly('y', ring)], 2)
        self.assertTrue(ideal.is_unit())
        self.assertEqual(ideal, Ideal(ring, [ring.one()]))

    def test_out_of_range(self):
        with self.assertRaises(LengthMismatch):
            jacobian_minors([self.parse('x*y')], 2)
        with self.assertRaises(LengthMismatch):
            minors([[self.ring.one()]], 0)

    def test_three_by_three_determinant(self):
        x, y, z = self.ring.gens
        zero = self.ring.zero()
        M = [[x, zero, zero], [zero, y, zero], [zero, zero, z]]
        self.assertEqual(minors(M, 3), [x * y * z])
