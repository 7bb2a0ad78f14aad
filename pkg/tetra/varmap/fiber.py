"""Fibers of rational maps and the degree of a map onto its image."""
import logging

from tetra.const import DEFAULT_SEED
from tetra.const import RESAMPLE_LIMIT
from tetra.groebner import Ideal
from tetra.varmap.baselocus import saturate_by_components
from tetra.varmap.exc import Inconclusive
from tetra.varmap.sampling import sample_source


logger = logging.getLogger('tetra.varmap')


def fiber(phi, y, components=None):
    """Ideal of the fiber of `phi` over the point `y`, away from the
    base locus.

    The fiber is cut out by the minors ``y_j f_k - y_k f_j`` where
    ``y_j`` is the first nonzero coordinate of `y`. On that scheme the
    form ``f_j`` vanishes exactly at base points, so saturating by it
    removes the base locus and nothing else. Certified base components
    may be passed as `components` instead; they are saturated away in
    turn.
    """
    ring = phi.source
    y = [int(c) % ring.p for c in y]
    if len(y) != len(phi.forms):
        raise ValueError("%s coordinates for a map to P^%s" % (len(y), len(phi.forms) - 1))
    j = next(i for i, c in enumerate(y) if c)
    gens = [phi.forms[k].scale(y[j]) - phi.forms[j].scale(y[k])
        for k in range(len(y)) if k != j]
    if phi.source_ideal is not None:
        gens.extend(phi.source_ideal.generators)
    ideal = Ideal(ring, gens)
    if components:
        return saturate_by_components(ideal, components)
    return ideal.saturate(Ideal(ring, [phi.forms[j]]))


def map_degree(phi, seed=DEFAULT_SEED, chain=None, components=None,
               attempts=RESAMPLE_LIMIT):
    """Degree of `phi` onto its image: the length of the fiber over
    the image of a seeded random point. Fibers that are not
    zero-dimensional are resampled up to `attempts` times.
    """
    for attempt in range(attempts):
        (x, y), = sample_source(phi, 1, seed, chain=chain, label='degree-%s' % attempt)
        dim, degree = fiber(phi, y, components).dim_degree()
        if dim == 0:
            logger.debug("Fiber of %s over %s has degree %s", phi.name, y, degree)
            return degree
        logger.warning("Fiber of %s over %s has dimension %s; resampling",
            phi.name, y, dim)
    raise Inconclusive("no zero-dimensional fiber of %s in %s attempts"
        % (phi.name, attempts))


def is_birational(phi, **kwargs):
    return map_degree(phi, **kwargs) == 1
