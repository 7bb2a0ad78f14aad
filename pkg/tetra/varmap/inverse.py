"""Inverse maps of birational maps by interpolation.

For each degree e, the forms ``h_0..h_n`` of degree e on the target are
unknowns and every sample ``(x, y = phi(x))`` contributes the linear
equations ``h_k(y) x_j - h_j(y) x_k = 0``. A kernel vector is accepted
only once the same identity holds exactly as polynomials on the source
variety.
"""
import logging

from tetra.const import DEFAULT_INVERSE_DEGREE
from tetra.const import DEFAULT_SEED
from tetra.modfield import FMatrix
from tetra.polyring import apply_ring_map
from tetra.polyring import compose_images
from tetra.varmap.exc import Inconclusive
from tetra.varmap.image import evaluation_matrix
from tetra.varmap.image import vector_to_form
from tetra.varmap.rmap import RationalMap
from tetra.varmap.sampling import chain_forms
from tetra.varmap.sampling import sample_source


logger = logging.getLogger('tetra.varmap')


class InverseCertificate(object):
    """Checks ``h_j(phi(x)) x_k - h_k(phi(x)) x_j == 0`` on the source
    variety of `phi`, either modulo its source ideal or, given a
    parametrization `chain`, after pulling back to the parameters.
    """

    def __init__(self, phi, chain=None):
        self.phi = phi
        self.chain = list(chain or [])
        if self.chain:
            self.x = chain_forms(self.chain)
            self.y = compose_images(phi.forms, self.x)
        else:
            self.x = phi.source.gens
            self.y = phi.forms

    def _vanishes(self, f):
        if self.chain or self.phi.source_ideal is None:
            return not f
        return not self.phi.source_ideal.reduce(f)

    def __call__(self, forms):
        hy = [apply_ring_map(self.y, h) for h in forms]
        if all(self._vanishes(f) for f in hy):
            return False
        n = len(forms)
        for j in range(n):
            for k in range(j + 1, n):
                if not self._vanishes(hy[j] * self.x[k] - hy[k] * self.x[j]):
                    return False
        return True


def _equations(samples, monomials, n, p):
    rows = []
    width = len(monomials)
    values = evaluation_matrix([y for _, y in samples], monomials, p).tolist()
    for (x, _), row in zip(samples, values):
        j = next(i for i, c in enumerate(x) if c)
        for k in range(n):
            if k == j:
                continue
            eq = [0] * (n * width)
            for t, v in enumerate(row):
                eq[k * width + t] = (v * x[j]) % p
                eq[j * width + t] = (-v * x[k]) % p
            rows.append(eq)
    return FMatrix.from_rows(rows, p, cols=n * width)


def inverse_map(phi, max_degree=DEFAULT_INVERSE_DEGREE, seed=DEFAULT_SEED,
                chain=None, image_ideal=None, margin=10):
    """Return the inverse of the birational map `phi` as a
    :class:`RationalMap` from its target to its source.

    `chain` parametrizes the source variety when `phi` has a source
    ideal. `image_ideal`, when known, becomes the source ideal of the
    result.
    """
    source, target = phi.source, phi.target
    p = source.prime
    n = source.nvars
    certify = InverseCertificate(phi, chain)
    for e in range(1, max_degree + 1):
        monomials = target.monomials(e)
        unknowns = n * len(monomials)
        count = unknowns // max(n - 1, 1) + margin
        samples = sample_source(phi, count, seed, chain=chain, label='inverse')
        matrix = _equations(samples, monomials, n, p)
        kernel = matrix.kernel()
        logger.debug("Inverse of %s in degree %s: %s unknowns, kernel of dimension %s",
            phi.name, e, unknowns, len(kernel))
        w = len(monomials)
        check = evaluation_matrix([y for _, y in samples[:margin]], monomials, p)
        for v in kernel:
            forms = [vector_to_form(target, monomials, v[i * w:(i + 1) * w]) for i in range(n)]
            if not any(any(check.dot(v[i * w:(i + 1) * w])) for i in range(n)):
                continue
            if certify(forms):
                return RationalMap(target, source, forms, source_ideal=image_ideal,
                    name='%s^-1' % phi.name)
            logger.warning("Degree %s candidate inverse of %s failed its certificate",
                e, phi.name)
    raise Inconclusive("no inverse of %s found" % phi.name, last_degree=max_degree)


def same_map(h, g, ideal=None):
    """True if the form lists `h` and `g` define the same map modulo
    `ideal`: every cross product ``h_j g_k - h_k g_j`` lies in it.
    Forms of `h` from another ring of the same size are identified
    with the ring of `g` by position.
    """
    forms_h = [f.identify(g[0].ring) for f in h]
    for j in range(len(g)):
        for k in range(j + 1, len(g)):
            f = forms_h[j] * g[k] - forms_h[k] * g[j]
            if f and (ideal is None or not ideal.contains_poly(f)):
                return False
    return True
