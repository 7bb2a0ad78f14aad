from tetra.const import DEFAULT_SEED
from tetra.lib.seeding import generator
from tetra.modfield import FMatrix
from tetra.polyring import Polynomial
from tetra.polyring import RingDescriptor
from tetra.polyring import compose_images
from tetra.varmap.exc import BasePointError
from tetra.varmap.point import ProjectivePoint
from tetra.varmap.rmap import RationalMap
from tetra.varmap.sampling import sample_span


def linear_embedding(points, ring=None, names='u'):
    """The map ``P^k -> P^n`` sending the coordinate points to the
    given points of P^n.
    """
    k = len(points)
    target = ring or RingDescriptor(['x_%s' % i for i in range(len(points[0]))], points[0].p)
    source = RingDescriptor(['%s_%s' % (names, i) for i in range(k)], target.prime)
    forms = []
    for j in range(target.nvars):
        forms.append(sum((source.gen(i).scale(points[i][j]) for i in range(k)),
            source.zero()))
    return RationalMap(source, target, forms, name='embedding')


def restrict_to_plane(phi, plane_basis):
    """``phi`` composed with the embedding of the plane spanned by the
    three points `plane_basis`.
    """
    if len(plane_basis) != 3:
        raise ValueError("a plane is spanned by three points")
    embedding = linear_embedding(plane_basis, phi.source)
    forms = compose_images(phi.forms, embedding.forms)
    return RationalMap(embedding.source, phi.target, forms, name='%s|plane' % phi.name)


def random_plane_through(point, seed=DEFAULT_SEED, label='plane'):
    """Three points spanning a seeded random plane through `point`."""
    rng = generator(seed, label, repr(point))
    n = len(point)
    while True:
        basis = [point] + [ProjectivePoint.random(rng, n, point.p) for _ in range(2)]
        rows = [list(b) for b in basis]
        if FMatrix.from_rows(rows, point.p, cols=n).rank() == 3:
            return basis


def contracted_image(phi, basis, samples=20, seed=DEFAULT_SEED):
    """The single image point of the span of `basis` under `phi`, or
    None when the samples do not all map to one point.
    """
    images = set()
    for x in sample_span(basis, samples, seed, 'contracted'):
        try:
            images.add(phi.evaluate(x))
        except BasePointError:
            continue
    if len(images) == 1:
        return images.pop()
    return None


def fixed_point_images(phi, points):
    """Images of the given points under `phi`."""
    return [phi.evaluate(x) for x in points]


def projection_from_span(points, source, target=None, source_ideal=None):
    """The linear projection of P^n from the span of `points`: its
    forms are a basis of the linear forms vanishing on them.
    """
    matrix = FMatrix.from_rows([list(x) for x in points], source.prime, cols=source.nvars)
    forms = []
    for v in matrix.kernel():
        forms.append(Polynomial(source, {
            tuple(int(i == j) for i in range(source.nvars)): c
            for j, c in enumerate(v) if c}))
    if target is None:
        target = RingDescriptor(['t_%s' % i for i in range(len(forms))], source.prime)
    return RationalMap(source, target, forms, source_ideal=source_ideal, name='projection')


def surviving_coordinates(projection):
    """Names of the source coordinates a coordinate projection keeps."""
    out = []
    for f in projection.forms:
        if len(f) == 1:
            (m, _), = f.terms.items()
            out.append(projection.source.variables[m.index(1)])
    return out
