"""Plane linear systems ``(d; m_1@a, ..., m_k@z)`` of curves of degree
d with assigned multiplicities at labelled points.
"""
import collections
import logging
import re

from tetra.cremona.exc import ChainScriptError
from tetra.cremona.exc import InvalidCenters


SystemInvariants = collections.namedtuple('SystemInvariants',
    ['self_intersection', 'anticanonical_pairing', 'virtual_genus'])

SYSTEM_PATTERN = re.compile(r'^\(\s*(-?\d+)\s*(?:;(.*))?\)$')
ENTRY_PATTERN = re.compile(r'^(-?\d+)\s*@\s*(\S+)$')


class PlaneLinearSystem(object):
    """A linear system of plane curves.

    Args:
        degree: the curve degree d.
        mults: a sequence of ``(label, multiplicity)`` pairs or a
            mapping; the order is kept for printing.
    """
    logger = logging.getLogger('tetra.cremona')

    def __init__(self, degree, mults=()):
        if hasattr(mults, 'items'):
            mults = list(mults.items())
        self.degree = int(degree)
        self.mults = collections.OrderedDict()
        for label, m in mults:
            if label in self.mults:
                raise ValueError("label %s assigned twice" % label)
            if int(m) < 0:
                raise ValueError("negative multiplicity at %s" % label)
            self.mults[label] = int(m)
        if self.degree < 0:
            raise ValueError("negative degree")

    @classmethod
    def parse(cls, text):
        """Parse ``(6; 3@p, 2@A12, ...)``."""
        match = SYSTEM_PATTERN.match(text.strip())
        if match is None:
            raise ChainScriptError("not a linear system: %r" % text)
        degree, body = match.groups()
        entries = []
        for item in (body or '').split(','):
            item = item.strip()
            if not item:
                continue
            entry = ENTRY_PATTERN.match(item)
            if entry is None:
                raise ChainScriptError("malformed entry %r in %r" % (item, text))
            entries.append((entry.group(2), int(entry.group(1))))
        try:
            return cls(int(degree), entries)
        except ValueError as e:
            raise ChainScriptError(str(e))

    def format(self):
        if not self.mults:
            return "(%s)" % self.degree
        return "(%s; %s)" % (self.degree,
            ', '.join('%s@%s' % (m, x) for x, m in self.mults.items()))

    def multiplicity(self, label):
        return self.mults.get(label, 0)

    @property
    def labels(self):
        return tuple(self.mults)

    def invariants(self):
        """The self-intersection ``d^2 - sum m^2``, the pairing
        ``3d - sum m`` with the anticanonical class and the virtual
        genus ``(d-1)(d-2)/2 - sum m(m-1)/2``.
        """
        d = self.degree
        ms = list(self.mults.values())
        return SystemInvariants(
            d * d - sum(m * m for m in ms),
            3 * d - sum(ms),
            (d - 1) * (d - 2) // 2 - sum(m * (m - 1) // 2 for m in ms))

    def quadratic_transform(self, centers, relabel=None):
        """Apply the standard quadratic transformation centered at three
        labelled points.

        The new degree is ``2d - m_a - m_b - m_c``. The line opposite a
        center is contracted to a point that takes the center's place
        (and, through `relabel`, usually a new name) with multiplicity
        ``d`` minus the multiplicities of the two other centers. Every
        other point keeps its multiplicity.
        """
        centers = tuple(centers)
        if len(centers) != 3:
            raise InvalidCenters("a quadratic transformation has three centers")
        if len(set(centers)) != 3:
            raise InvalidCenters("repeated centers: %s" % (centers,))
        relabel = dict(relabel or {})
        entries = list(self.mults.items())
        entries.extend((c, 0) for c in centers if c not in self.mults)
        unknown = set(relabel) - {x for x, _ in entries}
        if unknown:
            raise InvalidCenters("relabeling of unknown labels: %s"
                % ', '.join(sorted(unknown)))
        d = self.degree
        total = sum(self.multiplicity(c) for c in centers)
        degree = 2 * d - total
        out = []
        for label, m in entries:
            if label in centers:
                m = d - (total - m)
            out.append((relabel.get(label, label), m))
        if degree < 0 or any(m < 0 for _, m in out):
            raise InvalidCenters("centers %s exceed the degree of %s"
                % (','.join(centers), self.format()))
        if len({x for x, _ in out}) != len(out):
            raise InvalidCenters("relabeling merges labels")
        result = PlaneLinearSystem(degree, out)
        self.logger.debug("q_%s: %s -> %s", ','.join(centers), self.format(),
            result.format())
        return result

    def __eq__(self, other):
        if not isinstance(other, PlaneLinearSystem):
            return NotImplemented
        return self.degree == other.degree\
            and {x: m for x, m in self.mults.items() if m}\
            == {x: m for x, m in other.mults.items() if m}

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return "PlaneLinearSystem%s" % self.format()


def quadratic_transform(system, centers, relabel=None):
    return system.quadratic_transform(centers, relabel)


def system_invariants(system):
    return system.invariants()
