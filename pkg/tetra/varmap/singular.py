import logging

from tetra.groebner import Ideal
from tetra.groebner import irrelevant_ideal
from tetra.groebner import tangent_cone
from tetra.modfield import FMatrix
from tetra.modfield import inverse_mod
from tetra.polyring import minors
from tetra.polyring import jacobian


logger = logging.getLogger('tetra.varmap')

SMOOTH = 'smooth'
NODE = 'node'
QUADRIC_CONE_NODE = 'quadric-cone-node'
OTHER = 'other'


def singular_locus(X, dim):
    """Singular locus of the projective variety ``V(X)`` of dimension
    `dim`: the jacobian minors of size equal to the codimension,
    added to `X` and saturated by the irrelevant ideal.
    """
    ring = X.ring
    codim = ring.nvars - 1 - dim
    assert 0 < codim <= len(X.generators), "codimension out of range"
    gens = list(X.generators) + minors(jacobian(list(X.generators)), codim)
    return Ideal(ring, gens).saturate(irrelevant_ideal(ring))


def quadratic_form_matrix(q):
    """The symmetric matrix of the quadratic form `q`."""
    ring = q.ring
    p = ring.p
    n = ring.nvars
    half = inverse_mod(2, p)
    rows = [[0] * n for _ in range(n)]
    for m, c in q.terms.items():
        idx = [i for i, e in enumerate(m) for _ in range(e)]
        i, j = idx
        if i == j:
            rows[i][i] = c
        else:
            rows[i][j] = rows[j][i] = (c * half) % p
    return FMatrix.from_rows(rows, p, cols=n)


def cone_rank(cone):
    """Rank of the quadric of a degree-2 tangent cone, restricted to
    the linear span cut out by the cone's linear forms.
    """
    ring = cone.ring
    gb = cone.groebner()
    linear = [g for g in gb if g.degree() == 1]
    quadric = next(g for g in gb if g.degree() == 2)
    rows = [[g.terms.get(tuple(int(i == j) for i in range(ring.nvars)), 0)
        for j in range(ring.nvars)] for g in linear]
    kernel = FMatrix.from_rows(rows, ring.p, cols=ring.nvars).kernel()
    if not kernel:
        return 0
    B = FMatrix.from_rows(kernel, ring.p).transpose()
    S = quadratic_form_matrix(quadric)
    return B.transpose().dot(S).dot(B).rank()


def node_type(X, x):
    """Classify the point `x` of ``V(X)`` by its tangent cone.

    Multiplicity one is smooth. A degree-two cone is a node on a curve
    when its quadric has rank 2, and a quadric-cone node on a surface
    when the rank is 3; anything else is reported as other.
    """
    cone = tangent_cone(X, list(x))
    dim, multiplicity = cone.dim_degree()
    if multiplicity == 1:
        return SMOOTH
    if multiplicity != 2:
        return OTHER
    rank = cone_rank(cone)
    logger.debug("Tangent cone at %s: dimension %s, multiplicity 2, rank %s",
        x, dim, rank)
    if dim == 0 and rank == 2:
        return NODE
    if dim == 1 and rank == 3:
        return QUADRIC_CONE_NODE
    return OTHER
