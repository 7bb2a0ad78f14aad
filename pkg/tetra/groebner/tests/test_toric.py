import unittest

from tetra.groebner import Ideal
from tetra.groebner import lattice_kernel
from tetra.groebner import toric_ideal
from tetra.polyring import RingDescriptor
from tetra.polyring import parse_poly
from tetra.polyring.tests.base import P


class LatticeKernelTestCase(unittest.TestCase):

    def test_annihilated(self):
        A = [[3, 2, 1, 0], [0, 1, 2, 3]]
        kernel = lattice_kernel(A)
        self.assertEqual(len(kernel), 2)
        for u in kernel:
            for row in A:
                self.assertEqual(sum(a * b for a, b in zip(row, u)), 0)

    def test_full_rank(self):
        self.assertEqual(lattice_kernel([[1, 0], [0, 1]]), [])

    def test_saturated_lattice(self):
        # the kernel of (2, 4) is generated by (2, -1), not by a multiple
        kernel = lattice_kernel([[2, 4]])
        self.assertEqual(len(kernel), 1)
        self.assertIn(kernel[0], [(2, -1), (-2, 1)])


class ToricIdealTestCase(unittest.TestCase):

    def test_twisted_cubic(self):
        ring = RingDescriptor('x_0..x_3', P)
        I = toric_ideal([(3, 0), (2, 1), (1, 2), (0, 3)], ring)
        expected = Ideal(ring, [parse_poly(t, ring) for t in (
            'x_0*x_2-x_1^2', 'x_1*x_3-x_2^2', 'x_0*x_3-x_1*x_2')])
        self.assertEqual(I, expected)

    def test_quadric_cone(self):
        ring = RingDescriptor('t_0..t_3', P)
        I = toric_ideal([(2, 0), (1, 1), (0, 2), (1, 1)], ring)
        self.assertEqual(I, Ideal(ring, [parse_poly('t_0*t_2-t_1^2', ring),
            parse_poly('t_1-t_3', ring)]))
