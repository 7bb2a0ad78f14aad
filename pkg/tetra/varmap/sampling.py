"""Seeded sampling of points on images of parametrization chains.

A chain is a list of composable :class:`RationalMap` objects whose first
source is a full projective space. Parameter points are drawn uniformly
from that space and pushed through every stage; a draw is rejected when
some stage meets its base locus. Draws come from one generator per
(seed, label), so the first k samples never depend on how many are
requested.
"""
import logging

from tetra.const import REJECTION_WINDOW
from tetra.lib.seeding import generator
from tetra.lib.seeding import residues
from tetra.polyring import compose_images
from tetra.polyring.exc import RingMismatch
from tetra.varmap.exc import BasePointError
from tetra.varmap.exc import DegenerateChain
from tetra.varmap.point import ProjectivePoint


logger = logging.getLogger('tetra.varmap')


def check_chain(chain):
    """Raise unless the maps of `chain` compose left to right."""
    if not chain:
        raise ValueError("empty chain")
    if chain[0].source_ideal is not None:
        raise ValueError("a chain must start on a projective space")
    for a, b in zip(chain, chain[1:]):
        if not a.target.compatible(b.source):
            raise RingMismatch("%r does not land in the source of %r" % (a, b))


def chain_forms(chain):
    """Forms of the composite of `chain`, in the first source ring."""
    check_chain(chain)
    forms = chain[0].forms
    for phi in chain[1:]:
        forms = compose_images(phi.forms, forms)
    return forms


def trace(chain, point):
    """`point` followed by its image under every stage of `chain`;
    raises :class:`BasePointError` at a base point of any stage.
    """
    out = [point]
    for phi in chain:
        out.append(phi.evaluate(out[-1]))
    return out


def _draw(rng, source, stages, n, what):
    out = []
    window = rejected = 0
    while len(out) < n:
        x = ProjectivePoint.random(rng, source.nvars, source.prime)
        window += 1
        try:
            out.append(trace(stages, x))
        except BasePointError:
            rejected += 1
        if window == REJECTION_WINDOW:
            if rejected * 100 > 99 * window:
                raise DegenerateChain("%s of %s draws on %s hit a base locus"
                    % (rejected, window, what))
            window = rejected = 0
    return out


def sample_points(chain, n, seed, label='sample'):
    """`n` points on the image of `chain`, deterministic in `seed` and
    `label`.
    """
    check_chain(chain)
    rng = generator(seed, label, *[phi.name for phi in chain])
    traces = _draw(rng, chain[0].source, chain, n,
        ' -> '.join(phi.name for phi in chain))
    logger.debug("Sampled %s points through a chain of %s maps", n, len(chain))
    return [t[-1] for t in traces]


def sample_source(phi, n, seed, chain=None, label='source'):
    """`n` pairs ``(x, phi(x))`` with `x` on the source variety of
    `phi`. Points come from `chain` when `phi` lives on a subvariety.
    """
    chain = list(chain or [])
    if phi.source_ideal is not None and not chain:
        raise ValueError("sampling %r needs a parametrization chain" % phi)
    stages = chain + [phi]
    check_chain(stages)
    rng = generator(seed, label, *[m.name for m in stages])
    traces = _draw(rng, stages[0].source, stages, n, phi.name)
    return [(t[-2], t[-1]) for t in traces]


def sample_span(basis, n, seed, label='span'):
    """`n` uniform points of the projective span of the points
    `basis`.
    """
    p = basis[0].p
    rng = generator(seed, label, *[repr(b) for b in basis])
    out = []
    while len(out) < n:
        c = residues(rng, p, len(basis))
        values = [sum(ci * b[j] for ci, b in zip(c, basis)) % p
            for j in range(len(basis[0]))]
        if any(values):
            out.append(ProjectivePoint(values, p))
    return out


def chain_rank(stages, seed, label='rank'):
    """Generic rank of the jacobian of the composite of `stages`, by
    the chain rule at one seeded sample. This is one more than the
    dimension of the image.
    """
    check_chain(stages)
    rng = generator(seed, label, *[m.name for m in stages])
    t = _draw(rng, stages[0].source, stages, 1, stages[-1].name)[0]
    product = stages[0].jacobian_at(t[0])
    for phi, x in zip(stages[1:], t[1:]):
        product = phi.jacobian_at(x).dot(product)
    return product.rank()
