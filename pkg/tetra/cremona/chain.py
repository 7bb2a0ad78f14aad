"""Chains of quadratic transformations.

A chain script has one step per line::

    centers: p,A12,A03 ; relabel: p=p',A12=B12,A03=B03

Blank lines and lines starting with ``#`` are ignored.
"""
import logging

from tetra.cremona.exc import ChainScriptError
from tetra.cremona.system import PlaneLinearSystem


logger = logging.getLogger('tetra.cremona')


class ChainStep(object):
    """One quadratic transformation: three centers and the relabeling
    applied to the transformed system.
    """

    def __init__(self, centers, relabel=None):
        self.centers = tuple(centers)
        self.relabel = dict(relabel or {})

    @classmethod
    def parse(cls, line):
        centers = None
        relabel = {}
        for part in line.split(';'):
            part = part.strip()
            if not part:
                continue
            key, sep, value = part.partition(':')
            if not sep:
                raise ChainScriptError("expected 'key: value' in %r" % line)
            key = key.strip()
            values = [x.strip() for x in value.split(',') if x.strip()]
            if key == 'centers':
                centers = values
            elif key == 'relabel':
                for item in values:
                    old, sep, new = item.partition('=')
                    if not sep or not old.strip() or not new.strip():
                        raise ChainScriptError("malformed relabeling %r" % item)
                    relabel[old.strip()] = new.strip()
            else:
                raise ChainScriptError("unknown field %r" % key)
        if centers is None:
            raise ChainScriptError("step without centers: %r" % line)
        if len(centers) != 3:
            raise ChainScriptError("a step needs three centers: %r" % line)
        return cls(centers, relabel)

    def format(self):
        text = "centers: %s" % ','.join(self.centers)
        if self.relabel:
            text += " ; relabel: %s" % ','.join('%s=%s' % x for x in self.relabel.items())
        return text

    def apply(self, system):
        return system.quadratic_transform(self.centers, self.relabel)

    def __eq__(self, other):
        if not isinstance(other, ChainStep):
            return NotImplemented
        return self.centers == other.centers and self.relabel == other.relabel

    def __repr__(self):
        return "ChainStep(%s)" % self.format()


def parse_chain_script(text):
    """Parse a chain script into a list of :class:`ChainStep`."""
    steps = []
    for n, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        try:
            steps.append(ChainStep.parse(line))
        except ChainScriptError as e:
            raise ChainScriptError("line %s: %s" % (n, e))
    return steps


class Chain(object):
    """An initial :class:`PlaneLinearSystem` and the steps to apply."""

    def __init__(self, initial, steps=()):
        if isinstance(initial, str):
            initial = PlaneLinearSystem.parse(initial)
        self.initial = initial
        self.steps = [s if isinstance(s, ChainStep) else ChainStep.parse(s)
            for s in steps]

    def run(self):
        return run_chain(self.initial, self.steps)

    def script(self):
        return '\n'.join(s.format() for s in self.steps)


def run_chain(system, steps):
    """Apply `steps` in order. Returns the final system and the trace
    of every system along the way, starting with `system` itself.
    """
    trace = [system]
    for step in steps:
        system = step.apply(system)
        trace.append(system)
    logger.debug("Chain of %s steps: %s", len(steps),
        ' -> '.join(str(s.degree) for s in trace))
    return system, trace


def degree_trace(trace):
    return [s.degree for s in trace]


def invariant_trace(trace):
    return [tuple(s.invariants()) for s in trace]


def quadrilateral_chain():
    """The three transformations taking the sextics triple at p and
    double at the six vertices A_ij of a complete quadrilateral to the
    cubics through the six vertices D_ij of another one.
    """
    initial = PlaneLinearSystem(6, [('p', 3), ('A12', 2), ('A03', 2),
        ('A23', 2), ('A13', 2), ('A01', 2), ('A02', 2)])
    steps = [
        ChainStep(('p', 'A12', 'A03'), {
            'p': "p'", 'A12': 'B12', 'A03': 'B03', 'A23': 'B23',
            'A13': 'B13', 'A01': 'B01', 'A02': 'B02'}),
        ChainStep(("p'", 'B23', 'B01'), {
            "p'": "p''", 'B23': 'C23', 'B01': 'C01', 'B13': 'C13',
            'B12': 'C12', 'B02': 'C02', 'B03': 'C03'}),
        ChainStep(("p''", 'C13', 'C02'), {
            "p''": "p'''", 'C13': 'D13', 'C02': 'D02', 'C23': 'D23',
            'C12': 'D12', 'C01': 'D01', 'C03': 'D03'}),
    ]
    return Chain(initial, steps)
