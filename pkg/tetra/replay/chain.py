"""The plane Cremona chain from sextics to cubics, checked against the
cubic surface of a complete quadrilateral and the divisor classes of
the blow-up.
"""
from tetra.cremona import DivisorClass
from tetra.cremona import PlaneLinearSystem
from tetra.cremona import canonical_class
from tetra.cremona import degree_trace
from tetra.cremona import edge_quadric_class
from tetra.cremona import invariant_trace
from tetra.cremona import quadrilateral_chain
from tetra.cremona import run_chain
from tetra.cremona import sigma_class
from tetra.cremona.divisor import group
from tetra.groebner import Ideal
from tetra.groebner import rational_points_zero_dim
from tetra.lib.seeding import generator
from tetra.lib.seeding import residues
from tetra.varmap import QUADRIC_CONE_NODE
from tetra.varmap import contracted_image
from tetra.varmap import node_type
from tetra.varmap import plane_cubic_map
from tetra.varmap import quadrilateral_vertices
from tetra.varmap import seeded_quadrilateral
from tetra.varmap import singular_locus
from tetra.replay.base import BaseScenario


#: The systems after each transformation.
BLOCKS = [
    ('quintics', "(5; 2@p', 1@B12, 1@B03, 2@B23, 2@B13, 2@B01, 2@B02)"),
    ('quartics', "(4; 1@p'', 1@C12, 1@C03, 1@C23, 2@C13, 1@C01, 2@C02)"),
    ('cubics', "(3; 0@p''', 1@D12, 1@D03, 1@D23, 1@D13, 1@D01, 1@D02)")
]


class ChainScenario(BaseScenario):
    name = 'chain'

    def steps(self):
        return [
            ('transformations', self.transformations),
            ('quadrilateral_surface', self.quadrilateral_surface),
            ('divisor_classes', self.divisor_classes)
        ]

    def check_system(self, name, expected, actual):
        expected = PlaneLinearSystem.parse(expected)
        return self.report.add(name, expected.format(), actual.format(),
            passed=(expected == actual))

    def transformations(self):
        chain = self.fixtures.chain('quadrilateral_chain')
        self.final, trace = run_chain(chain.initial, chain.steps)
        self.check('degree_trace', [6, 5, 4, 3], degree_trace(trace))
        for (name, expected), system in zip(BLOCKS, trace[1:]):
            self.check_system(name, expected, system)
        self.check('invariant_trace', [(3, 3, 1)] * 4, invariant_trace(trace))
        self.invariants = self.final.invariants()
        self.check('final_virtual_genus', 1, self.invariants.virtual_genus)
        builtin = quadrilateral_chain()
        self.check('fixture_matches_builtin_chain', builtin.script(), chain.script())
        self.report.values['self_intersection'] = self.invariants.self_intersection

    def quadrilateral_surface(self):
        lines = seeded_quadrilateral(self.seed, self.prime)
        vertices = quadrilateral_vertices(lines, self.prime)
        phi = plane_cubic_map(vertices)
        surface = self.image(phi)
        dim, degree = surface.dim_degree()
        self.check('surface_dimension', 2, dim)
        self.check('surface_degree_equals_self_intersection',
            self.invariants.self_intersection, degree)
        sing = singular_locus(surface, 2)
        nodes = rational_points_zero_dim(sing)
        self.check('surface_nodes', [QUADRIC_CONE_NODE] * 4,
            [node_type(surface, x) for x in nodes])
        contracted = []
        for i in range(4):
            ends = [x for (a, b), x in sorted(vertices.items()) if i in (a, b)][:2]
            contracted.append(contracted_image(phi, ends, seed=self.seed) is not None)
        self.check('quadrilateral_lines_contracted', [True] * 4, contracted)

        rng = generator(self.seed, self.label('section'))
        h = phi.target.zero()
        for y, c in zip(phi.target.gens, residues(rng, self.prime, 4, nonzero=True)):
            h = h + y.scale(c)
        section = surface + Ideal(phi.target, [h])
        smooth = singular_locus(section, 1).is_unit()
        self.check('section_is_smooth_cubic', [(1, 3), True],
            [section.dim_degree(), smooth])
        self.check('section_genus_equals_virtual_genus',
            self.invariants.virtual_genus, 1 if smooth else None)

    def divisor_classes(self):
        sigma, canonical = sigma_class(), canonical_class()
        self.check('sigma_class', '6H - 3Ep - 3E0 - 3E1 - 3E2 - 3E3'
            " - 2E'1 - 2E'2 - 2E'3 - 2E''1 - 2E''2 - 2E''3"
            ' - 2F01 - 2F02 - 2F03 - 2F12 - 2F13 - 2F23 - R1 - R2 - R3',
            sigma.format())
        adjoint = DivisorClass.combination((2, 'H'), (-1, 'Ep'), (-1, group('E')),
            (-1, group('F')))
        self.check('adjoint_class', adjoint.format(), (canonical + sigma).format())
        self.check_true('adjoint_is_edge_quadric_minus_Ep',
            canonical + sigma == edge_quadric_class() - DivisorClass({'Ep': 1}))
