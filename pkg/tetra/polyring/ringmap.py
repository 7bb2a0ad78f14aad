from tetra.polyring.exc import LengthMismatch
from tetra.polyring.exc import RingMismatch
from tetra.polyring.poly import Polynomial


class PowerCache(object):
    """Memoizes powers of the substituted images."""

    def __init__(self, images):
        self.images = images
        self.powers = [{0: None, 1: g} for g in images]

    def get(self, i, e):
        cache = self.powers[i]
        if e not in cache:
            half = self.get(i, e // 2)
            value = half * half
            if e % 2:
                value = value * self.images[i]
            cache[e] = value
        return cache[e]


def apply_ring_map(images, f):
    """Substitute ``images[i]`` for the i-th variable of ``f.ring``.

    All images must live in one common target ring; the result lives
    there too.
    """
    images = list(images)
    if len(images) != f.ring.nvars:
        raise LengthMismatch("%s images for %s variables" % (len(images), f.ring.nvars))
    if not images:
        raise LengthMismatch("no images given")
    target = images[0].ring
    for g in images[1:]:
        if not g.ring.compatible(target):
            raise RingMismatch("images live in different rings")
    p = target.p
    cache = PowerCache(images)
    total = {}
    one = target.one()
    for m, c in f.terms.items():
        term = None
        for i, e in enumerate(m):
            if not e:
                continue
            factor = cache.get(i, e)
            term = factor if term is None else term * factor
        if term is None:
            term = one
        for mm, cc in term.terms.items():
            total[mm] = (total.get(mm, 0) + c * cc) % p
    return Polynomial(target, {m: c for m, c in total.items() if c}, check=False)


def compose_images(outer, inner):
    """Images of the composite map: substitute `inner` into each of
    the `outer` images.
    """
    return [apply_ring_map(inner, g) for g in outer]


def identity_images(ring):
    return ring.gens


def translation_images(ring, shifts):
    """Images of ``x_i -> x_i + shifts[i]`` where `shifts` are
    polynomials (or integers) of `ring`.
    """
    return [x + s for x, s in zip(ring.gens, shifts)]
