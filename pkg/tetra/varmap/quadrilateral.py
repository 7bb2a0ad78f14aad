"""Complete quadrilaterals in the plane and their cubic systems."""
import itertools

from tetra.const import DEFAULT_PRIME
from tetra.lib.seeding import generator
from tetra.lib.seeding import residues
from tetra.polyring import RingDescriptor
from tetra.varmap.conditions import LinearSystemWithConditions
from tetra.varmap.conditions import full_family
from tetra.varmap.point import ProjectivePoint
from tetra.varmap.rmap import RationalMap


def cross(a, b, p):
    return [(a[1] * b[2] - a[2] * b[1]) % p,
            (a[2] * b[0] - a[0] * b[2]) % p,
            (a[0] * b[1] - a[1] * b[0]) % p]


def _dot(a, b, p):
    return sum(x * y for x, y in zip(a, b)) % p


def quadrilateral_vertices(lines, p=DEFAULT_PRIME):
    """The six vertices ``{(i, j): point}`` of the complete
    quadrilateral formed by four lines, each given by the coefficients
    of its linear form.
    """
    lines = [[int(c) % p for c in line] for line in lines]
    if len(lines) != 4:
        raise ValueError("a complete quadrilateral has four lines")
    vertices = {}
    for i, j in itertools.combinations(range(4), 2):
        v = cross(lines[i], lines[j], p)
        if not any(v):
            raise ValueError("lines %s and %s coincide" % (i, j))
        for k in range(4):
            if k not in (i, j) and not _dot(lines[k], v, p):
                raise ValueError("lines %s, %s and %s are concurrent" % (i, j, k))
        vertices[(i, j)] = ProjectivePoint(v, p)
    return vertices


def seeded_quadrilateral(seed, p=DEFAULT_PRIME):
    """Four lines in general position drawn from `seed`."""
    rng = generator(seed, 'quadrilateral')
    while True:
        lines = [residues(rng, p, 3) for _ in range(4)]
        try:
            quadrilateral_vertices(lines, p)
        except ValueError:
            continue
        return lines


def plane_cubic_system(vertices, ring=None):
    """The family of plane cubics through the given points."""
    points = list(vertices.values()) if isinstance(vertices, dict) else list(vertices)
    ring = ring or RingDescriptor('x_0..x_2', points[0].p)
    system = LinearSystemWithConditions(full_family(ring, 3), [(v, 1) for v in points])
    return system.subfamily()


def plane_cubic_map(vertices, ring=None, target=None):
    """The map of the plane defined by the cubics through `vertices`."""
    family = plane_cubic_system(vertices, ring)
    members = family.members()
    target = target or RingDescriptor(['y_%s' % i for i in range(len(members))],
        family.geometric_ring.prime)
    return RationalMap(family.geometric_ring, target, members, name='cubics')
