"""For a general plane through p, the faces of the tetrahedron cut a
complete quadrilateral, and exactly one cubic passes through its six
vertices with a node at p.
"""
from tetra.const import TRIPLE_POINT
from tetra.groebner import Ideal
from tetra.lib.seeding import generator
from tetra.modfield import FMatrix
from tetra.polyring import RingDescriptor
from tetra.varmap import LinearSystemWithConditions
from tetra.varmap import NODE
from tetra.varmap import ProjectivePoint
from tetra.varmap import full_family
from tetra.varmap import node_type
from tetra.varmap import plane_system_dimension
from tetra.varmap import quadrilateral_vertices
from tetra.varmap import random_plane_through
from tetra.replay.base import BaseScenario


def face_lines(basis):
    """Coefficients of the traces of the faces ``s_i = 0`` on the
    plane spanned by `basis`, in the coordinates of that basis.
    """
    return [[b[i] for b in basis] for i in range(len(basis[0]))]


def edge_points(vertices):
    """Relabel quadrilateral vertices by tetrahedron edge: the vertex
    on the traces of faces i and j lies on the edge through the other
    two vertices.
    """
    out = {}
    for (i, j), x in vertices.items():
        k, l = [m for m in range(4) if m not in (i, j)]
        out['A%s%s' % (k, l)] = x
    return out


class LemmaScenario(BaseScenario):
    name = 'lemma'

    def steps(self):
        return [
            ('plane_sections', self.plane_sections)
        ]

    def section(self, index):
        """The six points ``A_kl`` of a seeded plane through p, in
        coordinates where p is ``[1:0:0]``.
        """
        p = ProjectivePoint(TRIPLE_POINT, self.prime)

        def draw(attempt):
            basis = random_plane_through(p, self.seed,
                self.label('plane', index, attempt))
            return edge_points(quadrilateral_vertices(face_lines(basis), self.prime))
        return self.resample('plane through p', draw)

    def control(self, index):
        rng = generator(self.seed, self.label('control', index))
        points = [ProjectivePoint.random(rng, 3, self.prime) for _ in range(6)]
        return plane_system_dimension(3, [(x, 1) for x in points], self.prime)

    def plane_sections(self):
        n = self.config.lemma_seeds
        plane = RingDescriptor('u_0..u_2', self.prime)
        p = ProjectivePoint([1, 0, 0], self.prime)
        dims, controls, collinear, conics, nodes = [], [], [], [], []
        for index in range(n):
            A = self.section(index)
            conditions = [(p, 2)] + [(x, 1) for x in A.values()]
            dims.append(plane_system_dimension(3, conditions, self.prime))
            controls.append(self.control(index))
            rows = [list(p), list(A['A01']), list(A['A23'])]
            collinear.append(FMatrix.from_rows(rows, self.prime, cols=3).rank() < 3)
            conics.append(plane_system_dimension(2,
                [(x, 1) for x in (p, A['A02'], A['A13'], A['A03'], A['A12'])],
                self.prime))
            cubics = LinearSystemWithConditions(full_family(plane, 3), conditions)
            members = cubics.subfamily().members()
            if len(members) == 1:
                nodes.append(node_type(Ideal(plane, members), p))
            else:
                nodes.append(None)
        self.logger.info("Checked %s plane sections through p", n)
        self.check('nodal_cubic_dimension', [0] * n, dims)
        self.check('six_general_points_dimension', [3] * n, controls)
        self.check('p_A01_A23_collinear', [False] * n, collinear)
        self.check('conic_through_five_points_dimension', [0] * n, conics)
        self.check('cubic_node_at_p', [NODE] * n, nodes)
