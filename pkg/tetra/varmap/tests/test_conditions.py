import unittest

import numpy as np

from tetra.polyring import ParametricFamily
from tetra.polyring import RingDescriptor
from tetra.polyring import parse_poly
from tetra.polyring.tests.base import P
from tetra.varmap import LinearSystemWithConditions
from tetra.varmap import ProjectivePoint
from tetra.varmap import full_family
from tetra.varmap import impose_point_multiplicity
from tetra.varmap import linear_system_dimension
from tetra.varmap import plane_system_dimension
from tetra.varmap.tests.base import SEXTIC_FAMILY
from tetra.varmap.tests.base import TRIPLE_AT_P
from tetra.varmap.tests.base import twisted_cubic


def general_points(n, k, seed):
    rng = np.random.default_rng(seed)
    return [ProjectivePoint.random(rng, k, P) for _ in range(n)]


class PointMultiplicityTestCase(unittest.TestCase):

    def setUp(self):
        self.plane = RingDescriptor('x_0..x_2', P)
        self.conics = full_family(self.plane, 2)

    def test_simple_point_is_one_condition(self):
        x, = general_points(1, 3, seed=1)
        system = LinearSystemWithConditions(self.conics, [(x, 1)])
        self.assertEqual(system.rank, 1)
        self.assertEqual(len(impose_point_multiplicity(self.conics, x, 1)), 5)

    def test_double_point_on_conics(self):
        x, = general_points(1, 3, seed=2)
        sub = impose_point_multiplicity(self.conics, x, 2)
        self.assertEqual(len(sub), 3)
        for f in sub.members():
            self.assertEqual(f.evaluate(x), 0)
            for v in self.plane.variables:
                self.assertEqual(f.diff(v).evaluate(x), 0)

    def test_too_many_conditions_empty_the_family(self):
        x, = general_points(1, 3, seed=3)
        sub = impose_point_multiplicity(self.conics, x, 3)
        self.assertEqual(len(sub), 0)
        self.assertEqual(sub.members(), [])

    def test_impose_accumulates(self):
        a, b = general_points(2, 3, seed=4)
        system = LinearSystemWithConditions(self.conics).impose(a, 1).impose(b, 1)
        self.assertEqual(system.parameter_count, 4)

    def test_sextics_with_a_triple_point(self):
        ring = RingDescriptor('l_0..l_13,s_0..s_3', P)
        params = ['l_%s' % i for i in range(14)]
        family = ParametricFamily.from_polynomial(parse_poly(SEXTIC_FAMILY, ring), params)
        p = ProjectivePoint([1, 1, 1, -1], P)
        system = LinearSystemWithConditions(family, [(p, 3)])
        self.assertEqual(system.rank, 10)
        sub = system.subfamily()
        self.assertEqual(sub.parameters, ('l_10', 'l_11', 'l_12', 'l_13'))
        expected_ring = RingDescriptor('l_10..l_13,s_0..s_3', P)
        self.assertEqual(sub.generic_element, parse_poly(TRIPLE_AT_P, expected_ring))


class PlaneSystemDimensionTestCase(unittest.TestCase):

    def test_cubics_through_six_points(self):
        points = general_points(6, 3, seed=5)
        self.assertEqual(plane_system_dimension(3, [(x, 1) for x in points]), 3)

    def test_nodal_cubics(self):
        x, = general_points(1, 3, seed=6)
        self.assertEqual(plane_system_dimension(3, [(x, 2)]), 6)

    def test_empty_system(self):
        points = general_points(10, 3, seed=7)
        self.assertEqual(plane_system_dimension(3, [(x, 1) for x in points]), -1)


class LinearSystemDimensionTestCase(unittest.TestCase):

    def test_quadrics_through_the_twisted_cubic(self):
        I = twisted_cubic()
        self.assertEqual(linear_system_dimension(I.ring, 2, I), 2)
        self.assertEqual(linear_system_dimension(I.ring, 1, I), -1)
