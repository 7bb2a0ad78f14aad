import unittest

from tetra.groebner import point_ideal
from tetra.varmap import base_locus
from tetra.varmap import certify_base_components
from tetra.varmap.tests.base import cremona_map
from tetra.varmap.tests.base import make_ideal
from tetra.varmap.tests.base import make_map


class BaseLocusTestCase(unittest.TestCase):

    def test_identity_of_the_line_has_no_base_points(self):
        phi = make_map('x_0,x_1', 'y_0,y_1', ['x_0', 'x_1'])
        self.assertTrue(base_locus(phi).is_unit())

    def test_monomial_map_with_all_pure_powers(self):
        phi = make_map('x_0,x_1', 'y_0..y_2', ['x_0^2', 'x_0*x_1', 'x_1^2'])
        self.assertTrue(base_locus(phi).is_unit())

    def test_quadratic_transformation(self):
        B = base_locus(cremona_map())
        self.assertEqual(B.dim_degree(), (0, 3))

    def test_line_in_the_base_locus(self):
        phi = make_map('x_0..x_3', 'y_0..y_2', ['x_0*x_2', 'x_0*x_3', 'x_1*x_3'])
        B = base_locus(phi)
        self.assertTrue(make_ideal('x_0..x_3', 'x_0', 'x_1').contains(B))
        self.assertEqual(B.dim_degree()[0], 1)


class BaseComponentsTestCase(unittest.TestCase):

    def setUp(self):
        self.phi = cremona_map()
        ring = self.phi.source
        self.points = [point_ideal(ring, v) for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]

    def test_coordinate_points_cover_the_base_locus(self):
        cert = certify_base_components(self.phi, self.points)
        self.assertEqual(cert.contained, [True, True, True])
        self.assertEqual(cert.residual_dimension, -1)
        self.assertTrue(cert.valid)

    def test_missing_component_leaves_a_residual(self):
        cert = certify_base_components(self.phi, self.points[:2])
        self.assertEqual(cert.residual_dimension, 0)
        self.assertTrue(cert.valid)

    def test_wrong_component(self):
        wrong = point_ideal(self.phi.source, (1, 1, 1))
        cert = certify_base_components(self.phi, self.points + [wrong])
        self.assertEqual(cert.contained, [True, True, True, False])
        self.assertFalse(cert)

    def test_positive_dimensional_residual(self):
        phi = make_map('x_0..x_3', 'y_0..y_2', ['x_0*x_2', 'x_0*x_3', 'x_1*x_3'])
        cert = certify_base_components(phi, [point_ideal(phi.source, (0, 0, 1, 0))])
        self.assertEqual(cert.residual_dimension, 1)
        self.assertFalse(cert.valid)
