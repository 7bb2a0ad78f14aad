"""Replay of the first computation: the quotient threefold W in P^13,
its projection to the quartic Q in P^5 and the birational map back to
P^3 given by sextics double along the edges of the tetrahedron.
"""
from tetra.modfield import FMatrix
from tetra.varmap import fixed_point_images
from tetra.varmap import inverse_map
from tetra.varmap import linear_system_dimension
from tetra.varmap import map_degree
from tetra.varmap import projection_from_span
from tetra.varmap import same_map
from tetra.varmap import surviving_coordinates
from tetra.replay.base import BaseScenario
from tetra.replay.report import digest


#: The eight fixed points of the involution on P^1 x P^1 x P^1, each
#: named by the three coordinates that vanish on it.
FIXED_POINTS = [
    ('x_1', 'y_0', 'z_0'),
    ('x_1', 'y_1', 'z_1'),
    ('x_0', 'y_1', 'z_0'),
    ('x_0', 'y_0', 'z_1'),
    ('x_0', 'y_1', 'z_1'),
    ('x_0', 'y_0', 'z_0'),
    ('x_1', 'y_0', 'z_1'),
    ('x_1', 'y_1', 'z_0')
]

PROJECTION_COORDINATES = ['w_2', 'w_5', 'w_6', 'w_7', 'w_8', 'w_11']


def fixed_point(ring, vanishing):
    return [0 if x in vanishing else 1 for x in ring.variables]


class Code1Scenario(BaseScenario):
    name = 'code1'

    def steps(self):
        return [
            ('image_of_pi', self.image_of_pi),
            ('fixed_points', self.fixed_points),
            ('projection', self.projection),
            ('quadrics_through_vertices', self.quadrics_through_vertices),
            ('composed_map', self.composed_map),
            ('sextic_inverse', self.sextic_inverse),
            ('toric_cross_check', self.toric_cross_check)
        ]

    def image_of_pi(self):
        self.pi = self.fixtures.map('pi')
        self.W = self.fixtures.ideal('w13_quadrics')
        W = self.image(self.pi, degree=24)
        self.check('quadrics_in_image', 42,
            linear_system_dimension(W.ring, 2, W) + 1)
        self.check_ideal('image_equals_42_quadrics', self.W, W)
        self.check('dim_degree_W', (3, 24), W.dim_degree())

    def fixed_points(self):
        points = [fixed_point(self.pi.source, x) for x in FIXED_POINTS]
        images = fixed_point_images(self.pi, points)
        self.check('fixed_point_images_are_coordinate_points', [1] * 8,
            [sum(1 for c in y if c) for y in images])
        rows = [list(y) for y in images]
        self.check('fixed_point_span_rank', 8,
            FMatrix.from_rows(rows, self.prime, cols=self.pi.target.nvars).rank())
        self.projection_map = projection_from_span(images, self.pi.target)
        self.check('projection_coordinates', PROJECTION_COORDINATES,
            surviving_coordinates(self.projection_map))

    def projection(self):
        self.rho = self.fixtures.map('rho')
        self.check_true('projection_equals_rho',
            same_map(self.projection_map.forms, self.rho.forms))
        self.Q = self.fixtures.ideal('q_quadrics')
        rho = self.rho.restrict(self.W)
        Q = self.image(rho, chain=[self.pi], degree=4)
        self.check_ideal('image_equals_Q', self.Q, Q)
        self.check('dim_degree_Q', (3, 4), Q.dim_degree())
        self.check('projection_birational', 1,
            map_degree(rho, seed=self.seed, chain=[self.pi]))

    def quadrics_through_vertices(self):
        q = self.fixtures.map('q')
        self.check_ideal('q_image_equals_Q', self.Q, self.image(q, degree=4))
        self.check('q_birational', 1, map_degree(q, seed=self.seed))
        computed = inverse_map(q, seed=self.seed, image_ideal=self.Q)
        self.q_inverse = self.fixtures.map('q_inverse')
        self.check('q_inverse_degree', 2, computed.degree)
        self.check('q_inverse_equals_displayed', True,
            same_map(computed.forms, self.q_inverse.forms, self.Q),
            coefficients=True)

    def composed_map(self):
        self.composed = self.fixtures.map('composed')
        computed = self.q_inverse.compose(self.rho)
        self.check('composed_equals_displayed', True,
            same_map(computed.forms, self.composed.forms, self.W),
            coefficients=True)

    def sextic_inverse(self):
        composed = self.composed.restrict(self.W)
        inverse = inverse_map(composed, seed=self.seed, chain=[self.pi],
            image_ideal=None)
        self.check_true('composed_birational', inverse is not None)
        self.check('inverse_degree', 6, inverse.degree)
        nu = self.fixtures.map('nu')
        self.check('inverse_equals_14_sextics', True,
            same_map(inverse.forms, nu.forms), coefficients=True)
        self.check_ideal('nu_image_equals_W', self.W, self.image(nu, degree=24))

    def toric_cross_check(self):
        if not self.config.cross_check:
            self.report.skip('toric_image_equals_W', digest(self.W))
            return
        self.check_ideal('toric_image_equals_W', self.W,
            self.image(self.pi, strategy='toric'))
