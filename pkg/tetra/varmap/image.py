"""Closures of images of rational maps.

Three strategies compute the homogeneous ideal of the image. Whatever
the strategy, every generator it returns is checked by exact
substitution before the ideal is handed back.
"""
import logging

import numpy as np

from tetra.const import DEFAULT_IMAGE_DEGREE
from tetra.const import DEFAULT_SEED
from tetra.const import DEFAULT_STRATEGY
from tetra.groebner import Ideal
from tetra.groebner import hilbert_function
from tetra.groebner import toric_ideal
from tetra.modfield import FMatrix
from tetra.modfield import inverse_mod
from tetra.polyring import Polynomial
from tetra.polyring import RingDescriptor
from tetra.polyring import apply_ring_map
from tetra.varmap.exc import Inconclusive
from tetra.varmap.sampling import chain_forms
from tetra.varmap.sampling import chain_rank
from tetra.varmap.sampling import sample_points


def evaluation_matrix(points, monomials, p):
    """Rows ``[y^m for m in monomials]``, one per point."""
    if not points:
        return FMatrix.zeros(0, len(monomials), p)
    Y = np.array([list(y) for y in points], dtype=np.int64)
    degree = max(sum(m) for m in monomials)
    powers = [np.ones_like(Y)]
    for _ in range(degree):
        powers.append(np.mod(powers[-1] * Y, p))
    columns = []
    for m in monomials:
        col = np.ones(Y.shape[0], dtype=np.int64)
        for i, e in enumerate(m):
            if e:
                col = np.mod(col * powers[e][:, i], p)
        columns.append(col)
    return FMatrix(np.stack(columns, axis=1), p)


def vector_to_form(ring, monomials, vector):
    return Polynomial(ring, {m: c for m, c in zip(monomials, vector) if c})


def form_to_vector(f, monomials):
    return [f.terms.get(m, 0) for m in monomials]


class ImageCertificate(object):
    """Decides whether a form vanishes on the image of `phi`.

    With a parametrization `chain` of the source variety the form is
    pulled back to the parameter space, where vanishing means being
    the zero polynomial; otherwise it is reduced modulo the source
    ideal.
    """

    def __init__(self, phi, chain=None):
        self.phi = phi
        self.chain = list(chain or [])
        if self.chain:
            self.forms = chain_forms(self.chain + [phi])
        else:
            self.forms = phi.forms

    def __call__(self, g):
        pulled = apply_ring_map(self.forms, g.set_ring(self.phi.target))
        if self.chain or self.phi.source_ideal is None:
            return not pulled
        return not self.phi.source_ideal.reduce(pulled)


class BaseImageStrategy(object):
    """Specifies the interface of the image strategies.

    Args:
        max_degree: the largest degree of generator searched for.
        chain: parametrization of the source variety, required by
            sampling strategies when the map has a source ideal.
        seed: seed for all sampling.
        degree: the expected degree of the image, when known; sampling
            strategies keep searching until they reach it.
    """
    name = None
    logger = logging.getLogger('tetra.varmap')

    def __init__(self, max_degree=DEFAULT_IMAGE_DEGREE, chain=None, seed=DEFAULT_SEED,
                 degree=None):
        self.max_degree = max_degree
        self.degree = degree
        self.chain = list(chain or [])
        self.seed = seed

    def is_applicable(self, phi):
        return True

    def compute(self, phi):
        """Return the generators of the image ideal."""
        raise NotImplementedError

    def __call__(self, phi):
        if not self.is_applicable(phi):
            raise ValueError("strategy %s does not apply to %r" % (self.name, phi))
        generators = self.compute(phi)
        certify = ImageCertificate(phi, self.chain)
        for g in generators:
            if not certify(g):
                raise Inconclusive("generator %s does not vanish on the image" % g)
        self.logger.debug("Image of %s (%s): %s certified generators",
            phi.name, self.name, len(generators))
        return Ideal(phi.target, generators)


class InterpolationStrategy(BaseImageStrategy):
    """Solve for the forms of each degree that vanish on seeded image
    samples, degree by degree, until the ideal found has the dimension
    of the generic rank of the map and, when given, the expected degree,
    and the higher degrees bring no new forms.
    """
    name = 'interpolation'
    margin = 10
    lookahead_limit = 1000

    def samples(self, phi, n):
        stages = self.chain + [phi]
        return sample_points(stages, n, self.seed, 'image')

    def vanishing(self, phi, degree):
        monomials = phi.target.monomials(degree)
        points = self.samples(phi, len(monomials) + self.margin)
        kernel = evaluation_matrix(points, monomials, phi.target.prime).kernel()
        return monomials, kernel

    def closed(self, phi, ideal, d):
        """True if every degree above `d`, up to `max_degree`, has no
        vanishing forms outside `ideal`. Degree ``d + 1`` is always
        looked at; later ones only while their monomial count stays
        under `lookahead_limit`.
        """
        for e in range(d + 1, max(self.max_degree, d + 1) + 1):
            if e > d + 1 and len(phi.target.monomials(e)) > self.lookahead_limit:
                break
            monomials, kernel = self.vanishing(phi, e)
            if len(kernel) != len(monomials) - hilbert_function(ideal, e):
                self.logger.debug("Degree %s has forms outside the ideal found", e)
                return False
        return True

    def compute(self, phi):
        target = phi.target
        p = target.prime
        expected = chain_rank(self.chain + [phi], self.seed) - 1
        if expected == target.nvars - 1:
            return []
        certify = ImageCertificate(phi, self.chain)
        generators = []
        for d in range(1, self.max_degree + 1):
            monomials, kernel = self.vanishing(phi, d)
            rows = [form_to_vector(g * m, monomials) for g in generators
                for m in _monomials_of(target, d - g.degree())]
            span = FMatrix.from_rows(rows, p, cols=len(monomials))
            rank = span.rank()
            for v in kernel:
                grown = span.vstack(FMatrix.from_rows([v], p, cols=len(monomials)))
                if grown.rank() == rank:
                    continue
                f = vector_to_form(target, monomials, v)
                if not certify(f):
                    raise Inconclusive("interpolated form %s does not vanish on the image" % f,
                        last_degree=d)
                generators.append(f)
                span, rank = grown, rank + 1
            self.logger.debug("Degree %s: %s vanishing forms, %s generators so far",
                d, len(kernel), len(generators))
            if not generators:
                continue
            ideal = Ideal(target, generators)
            dim, degree = ideal.dim_degree()
            if dim != expected:
                continue
            if self.degree is not None:
                # every form is certified, so V(ideal) contains the image
                if degree < self.degree:
                    raise Inconclusive("image of %s has degree %s, expected %s"
                        % (phi.name, degree, self.degree), last_degree=d)
                if degree > self.degree:
                    continue
            if self.closed(phi, ideal, d):
                return generators
        raise Inconclusive("image of %s not closed" % phi.name, last_degree=self.max_degree)


def _monomials_of(ring, degree):
    return [ring.monomial(m) for m in ring.monomials(degree)] if degree >= 0 else []


class EliminationStrategy(BaseImageStrategy):
    """Eliminate the source variables from the graph ideal
    ``(y_i - f_i) + I(X)``.
    """
    name = 'elimination'

    def compute(self, phi):
        source, target = phi.source, phi.target
        names = list(target.variables)
        if set(names) & set(source.variables):
            names = ['%s_%s' % (_fresh_prefix(source), i) for i in range(target.nvars)]
        work = RingDescriptor(list(source.variables) + names, source.prime)
        gens = [work.gen(y) - f.set_ring(work) for y, f in zip(names, phi.forms)]
        if phi.source_ideal is not None:
            gens.extend(g.set_ring(work) for g in phi.source_ideal.generators)
        ideal = Ideal(work, gens).eliminate(source.variables)
        return [Polynomial(target, g.terms, check=False) for g in ideal.generators]


def _fresh_prefix(ring):
    prefix = 'y'
    while any(v.split('_')[0] == prefix for v in ring.variables):
        prefix += 'y'
    return prefix


class ToricStrategy(BaseImageStrategy):
    """The kernel of a monomial map, from the integer kernel of its
    exponent matrix. Coefficients of the forms rescale the target
    variables.
    """
    name = 'toric'

    def is_applicable(self, phi):
        return phi.is_monomial() and phi.source_ideal is None

    def compute(self, phi):
        target = phi.target
        p = target.prime
        exponents, scales = [], []
        for f in phi.forms:
            (m, c), = f.terms.items()
            exponents.append(m)
            scales.append(c)
        ideal = toric_ideal(exponents, target)
        if all(c == 1 for c in scales):
            return list(ideal.generators)
        images = [y.scale(inverse_mod(c, p)) for y, c in zip(target.gens, scales)]
        return [apply_ring_map(images, g) for g in ideal.generators]


class AutoStrategy(BaseImageStrategy):
    """Toric for monomial maps, elimination for small graph ideals,
    interpolation otherwise.
    """
    name = 'auto'
    elimination_limit = 10

    def select(self, phi):
        if phi.is_monomial() and phi.source_ideal is None:
            cls = ToricStrategy
        elif phi.source.nvars + phi.target.nvars <= self.elimination_limit:
            cls = EliminationStrategy
        else:
            cls = InterpolationStrategy
        return cls(max_degree=self.max_degree, chain=self.chain, seed=self.seed,
            degree=self.degree)

    def __call__(self, phi):
        return self.select(phi)(phi)


STRATEGIES = {cls.name: cls for cls in (InterpolationStrategy,
    EliminationStrategy, ToricStrategy, AutoStrategy)}


def get_strategy(name, **kwargs):
    try:
        cls = STRATEGIES[name]
    except KeyError:
        raise ValueError("unknown image strategy: %r" % name)
    return cls(**kwargs)


def image(phi, strategy=DEFAULT_STRATEGY, max_degree=DEFAULT_IMAGE_DEGREE,
          chain=None, seed=DEFAULT_SEED, degree=None):
    """The ideal of the closure of the image of `phi`.

    `chain` parametrizes the source variety when `phi` carries a source
    ideal; sampling strategies push their samples through it.
    """
    return get_strategy(strategy, max_degree=max_degree, chain=chain, seed=seed,
        degree=degree)(phi)
