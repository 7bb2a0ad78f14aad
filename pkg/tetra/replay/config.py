import os

from tetra.const import DEFAULT_FORMAT
from tetra.const import DEFAULT_PRIME
from tetra.const import DEFAULT_SEED
from tetra.const import DEFAULT_STRATEGY


class Scenario(object):
    """The parameters of one replay run. Identical values produce
    identical reports.
    """

    def __init__(self, name, prime=DEFAULT_PRIME, seed=DEFAULT_SEED,
                 strategy=DEFAULT_STRATEGY, out=None, format=DEFAULT_FORMAT,
                 jobs=1, timings=False, cross_check=False, lemma_seeds=20,
                 fixtures=None):
        self.name = name
        self.prime = prime
        self.seed = seed
        self.strategy = strategy
        self.out = os.path.abspath(out) if out else None
        self.format = format
        self.jobs = jobs
        self.timings = timings
        self.cross_check = cross_check
        self.lemma_seeds = lemma_seeds
        self.fixtures = fixtures

    def replace(self, **kwargs):
        params = dict(self.__dict__)
        params.update(kwargs)
        return Scenario(**params)

    def __repr__(self):
        return "Scenario(%s, prime=%s, seed=%s, strategy=%s)"\
            % (self.name, self.prime, self.seed, self.strategy)


KINDS = ('ideal', 'map', 'chain')


class Fixture(object):
    """One entry of the fixture manifest: a file transcribing a known
    ideal, map or transformation chain.
    """

    def __init__(self, name, kind, path, describes=''):
        self.name = name
        self.kind = kind
        self.path = path
        self.describes = describes

    def __repr__(self):
        return "Fixture(%s, %s)" % (self.name, self.path)
