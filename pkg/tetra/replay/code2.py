"""Replay of the second computation: the sextics double along the
edges of the coordinate tetrahedron and triple at p, and the nodal
cubic surface they map P^3 onto.
"""
import itertools

from tetra.const import TRIPLE_POINT
from tetra.groebner import Ideal
from tetra.groebner import irrelevant_ideal
from tetra.groebner import linear_span_ideal
from tetra.groebner import point_ideal
from tetra.groebner import rational_points_zero_dim
from tetra.groebner import tangent_cone
from tetra.lib.seeding import generator
from tetra.lib.seeding import residues
from tetra.modfield import FMatrix
from tetra.polyring import ParametricFamily
from tetra.polyring import RingDescriptor
from tetra.polyring import format_poly
from tetra.varmap import LinearSystemWithConditions
from tetra.varmap import NODE
from tetra.varmap import ProjectivePoint
from tetra.varmap import QUADRIC_CONE_NODE
from tetra.varmap import RationalMap
from tetra.varmap import certify_base_components
from tetra.varmap import contracted_image
from tetra.varmap import fiber
from tetra.varmap import linear_system_dimension
from tetra.varmap import map_degree
from tetra.varmap import node_type
from tetra.varmap import random_plane_through
from tetra.varmap import restrict_to_plane
from tetra.varmap import singular_locus
from tetra.replay.base import BaseScenario
from tetra.replay.report import digest


PARAMETERS = ['l_%s' % i for i in range(14)]

SURVIVING_PARAMETERS = ['l_10', 'l_11', 'l_12', 'l_13']

#: Index pairs of the six edges of the tetrahedron.
EDGES = list(itertools.combinations(range(4), 2))


def unit(i, n=4):
    return [int(i == j) for j in range(n)]


def edge_ideal(ring, i, j):
    """Ideal of the edge through the vertices `i` and `j`."""
    return Ideal(ring, [ring.gen(k) for k in range(ring.nvars) if k not in (i, j)])


def vertex_ideal(ring, i):
    return Ideal(ring, [ring.gen(k) for k in range(ring.nvars) if k != i])


def presentation_family(ring):
    """The sextics written as ``sum a_i prod_{j != i} s_j^2`` plus
    ``s_0 s_1 s_2 s_3`` times a quadric.
    """
    s = ring.gens
    product = s[0] * s[1] * s[2] * s[3]
    members = []
    for i in range(4):
        f = ring.one()
        for j in range(4):
            if j != i:
                f = f * s[j] * s[j]
        members.append(f)
    for i, j in itertools.combinations_with_replacement(range(4), 2):
        members.append(product * s[i] * s[j])
    names = ['m_%s' % i for i in range(len(members))]
    return ParametricFamily.from_members(members, names)


class Code2Scenario(BaseScenario):
    name = 'code2'

    def steps(self):
        return [
            ('triple_point_condition', self.triple_point_condition),
            ('sextic_family', self.sextic_family),
            ('image_of_nu_bullet', self.image_of_nu_bullet),
            ('singular_locus', self.singular_points),
            ('hyperplane_section', self.hyperplane_section),
            ('generic_fiber', self.generic_fiber),
            ('base_locus', self.base_locus),
            ('contractions', self.contractions),
            ('plane_restriction', self.plane_restriction),
            ('tangent_cone', self.tangent_cone)
        ]

    @property
    def p(self):
        return ProjectivePoint(TRIPLE_POINT, self.prime)

    def triple_point_condition(self):
        generic = self.fixtures.ideal('sextic_family').generators[0]
        self.family = ParametricFamily.from_polynomial(generic, PARAMETERS)
        self.S = self.family.geometric_ring
        system = LinearSystemWithConditions(self.family, [(self.p, 3)])
        self.check('condition_rank', 10, system.rank)
        self.sigma = system.subfamily()
        self.check('surviving_parameters', SURVIVING_PARAMETERS, list(self.sigma.parameters))
        expected = self.fixtures.ideal('sigma_triple').generators[0]
        self.check('family_equation', digest(format_poly(expected)),
            digest(format_poly(self.sigma.generic_element)), coefficients=True)

    def sextic_family(self):
        self.check('family_dimension', 13, self.family.dimension)
        presented = presentation_family(self.S)
        self.check('presentation_dimension', 13, presented.dimension)
        self.check_true('presentation_spans_family', presented.span_equals(self.family))
        edges = [edge_ideal(self.S, i, j) for i, j in EDGES]
        self.edges = edges
        union = edges[0]
        for e in edges[1:]:
            union = union.intersect(e)
        self.check('no_quadric_contains_edges', -1,
            linear_system_dimension(self.S, 2, union))
        members = Ideal(self.S, self.family.members())
        self.check_true('double_along_edges', all((e * e).contains(members) for e in edges))
        self.check_true('triple_at_vertices', all(
            (v * v * v).contains(members) for v in
            [vertex_ideal(self.S, i) for i in range(4)]))

    def image_of_nu_bullet(self):
        self.T = RingDescriptor('y_0..y_3', self.prime)
        self.nu = RationalMap(self.S, self.T, self.sigma.members(), name='nu_bullet')
        self.Delta = self.image(self.nu)
        self.check('image_generator_degrees', [3],
            [g.degree() for g in self.Delta.groebner()])
        self.check('image_dim_degree', (2, 3), self.Delta.dim_degree())
        self.report.values['delta_degree'] = self.Delta.dim_degree()[1]

    def singular_points(self):
        sing = singular_locus(self.Delta, 2)
        self.check('singular_locus_dim_degree', (0, 4), sing.dim_degree())
        points = rational_points_zero_dim(sing)
        self.node_points = [ProjectivePoint(x, self.prime) for x in points]
        self.check('nodes_count', 4, len(self.node_points))
        self.check('node_types', [QUADRIC_CONE_NODE] * 4,
            [node_type(self.Delta, x) for x in self.node_points])
        self.report.skip('cayley_normal_form', 'projective equivalence not certified')

    def hyperplane_section(self):
        rng = generator(self.seed, self.label('section'))
        h = self.T.zero()
        for y, c in zip(self.T.gens, residues(rng, self.prime, self.T.nvars, nonzero=True)):
            h = h + y.scale(c)
        section = self.Delta + Ideal(self.T, [h])
        self.check('section_dim_degree', (1, 3), section.dim_degree())
        smooth = singular_locus(section, 1).is_unit()
        self.check_true('section_smooth', smooth)
        if smooth:
            self.report.values['section_genus'] = 1

    def generic_fiber(self):
        def draw(attempt):
            rng = generator(self.seed, self.label('fiber', attempt))
            x = ProjectivePoint.random(rng, 4, self.prime)
            if not all(x):
                raise ValueError("%s lies on the tetrahedron" % (x,))
            return x, self.nu.evaluate(x)
        x, y = self.resample('fiber point', draw)
        F = fiber(self.nu, list(y))
        self.check('fiber_dim_degree', (1, 3), F.dim_degree())
        linear = [g for g in F.groebner() if g.degree() == 1]
        self.check('fiber_plane_dim_degree', (2, 1), Ideal(self.S, linear).dim_degree())
        P = point_ideal(self.S, list(self.p))
        self.check_true('fiber_through_p', P.contains(F))
        self.check_true('fiber_singular_only_at_p', singular_locus(F, 1) == P)
        self.check('fiber_node_at_p', NODE, node_type(F, self.p))
        self.check('fiber_meets_edges', [(0, 1)] * 6,
            [(F + e).dim_degree() for e in self.edges])

    def r_line(self, i):
        """``<p, <p, l_0i> ∩ l_jk>`` with ``{j, k}`` the other two
        vertices.
        """
        j, k = [x for x in range(1, 4) if x != i]
        plane = linear_span_ideal(self.S, [list(self.p), unit(0), unit(i)])
        line = linear_span_ideal(self.S, [unit(j), unit(k)])
        point, = rational_points_zero_dim(plane + line)
        return linear_span_ideal(self.S, [list(self.p), list(point)])

    def base_locus(self):
        self.r = [self.fixtures.ideal('r%s' % i) for i in range(1, 4)]
        for i in range(1, 4):
            built = self.r_line(i)
            self.check_ideal('r%s_construction' % i, self.r[i - 1], built)
            j, k = [x for x in range(1, 4) if x != i]
            self.check('r%s_meets_edges' % i, [(0, 1), (0, 1)],
                [(built + edge_ideal(self.S, 0, i)).dim_degree(),
                 (built + edge_ideal(self.S, j, k)).dim_degree()])
        certificate = certify_base_components(self.nu, self.edges + self.r)
        self.check('base_locus_contains_components', [True] * 9, certificate.contained)
        self.check_true('base_locus_residual_dimension', certificate.residual_dimension <= 0)
        self.check('base_locus_method', 'component certificate',
            'component certificate' if certificate.valid else 'uncertified')

    def contractions(self):
        nodes = sorted(self.node_points, key=lambda x: x.values)
        faces, lines = [], []
        for i in range(4):
            basis = [ProjectivePoint(unit(j), self.prime) for j in range(4) if j != i]
            faces.append(contracted_image(self.nu, basis, seed=self.seed))
            lines.append(contracted_image(self.nu,
                [self.p, ProjectivePoint(unit(i), self.prime)], seed=self.seed))
        self.check_true('faces_contracted', all(x is not None for x in faces))
        self.check_true('lines_contracted', all(x is not None for x in lines))
        self.check('face_images_are_nodes', [list(x) for x in nodes],
            sorted([list(x) for x in faces if x is not None]))
        self.check('line_images_are_nodes', [list(x) for x in nodes],
            sorted([list(x) for x in lines if x is not None]))
        self.check('face_line_images_coincide', 4, len({x for x in faces + lines
            if x is not None}))

    def plane_restriction(self):
        def draw(attempt):
            basis = random_plane_through(self.p, self.seed,
                self.label('plane', attempt))
            components = []
            for i, j in EDGES:
                rows = [[b[k] for b in basis] for k in range(4) if k not in (i, j)]
                kernel = FMatrix.from_rows(rows, self.prime, cols=3).kernel()
                if len(kernel) != 1:
                    raise ValueError("plane contains an edge")
                components.append(kernel[0])
            return basis, components
        basis, points = self.resample('plane through p', draw)
        phi = restrict_to_plane(self.nu, basis)
        components = [point_ideal(phi.source, [1, 0, 0])]
        components.extend(point_ideal(phi.source, list(c)) for c in points)
        self.check('plane_restriction_birational', 1,
            map_degree(phi, seed=self.seed, components=components))

    def tangent_cone(self):
        family = Ideal(self.sigma.ring, [self.sigma.generic_element])
        cone = tangent_cone(family, TRIPLE_POINT, variables=self.S.variables,
            projective=True)
        self.check('tangent_cone_generator_count', 1, len(cone.generators))
        self.check_ideal('tangent_cone_equals_displayed',
            self.fixtures.ideal('tangent_cone'), cone)
        cubics = ParametricFamily.from_polynomial(cone.generators[0],
            SURVIVING_PARAMETERS)
        plane = cubics.geometric_ring
        base = Ideal(plane, cubics.members()).saturate(irrelevant_ideal(plane))
        self.check('cone_base_points_dim_degree', (0, 3), base.dim_degree())
        expected = []
        for r in self.r:
            x, = rational_points_zero_dim(r + Ideal(self.S, [self.S.gen('s_3')]))
            expected.append(ProjectivePoint(x[:3], self.prime))
        actual = [ProjectivePoint(x, self.prime) for x in rational_points_zero_dim(base)]
        self.check('cone_base_points', sorted([list(x) for x in expected]),
            sorted([list(x) for x in actual]))
