import logging

from tetra.const import DEFAULT_PRIME
from tetra.const import RESAMPLE_LIMIT
from tetra.lib.timing import Timings
from tetra.replay.exc import GenericityError
from tetra.replay.fixtureset import FixtureSet
from tetra.replay.report import Report
from tetra.replay.report import digest
from tetra.varmap import image


class BaseScenario(object):
    """Specifies the interface of all replay scenarios.

    A scenario is an ordered list of named steps. Each step computes
    geometric objects from the transcribed fixtures and records checks
    on the :class:`~tetra.replay.report.Report`. A step that raises is
    recorded as a failed check named after it, and the remaining steps
    are not run.

    Args:
        config: the :class:`~tetra.replay.config.Scenario` to run.
        fixtures: a :class:`~tetra.replay.fixtureset.FixtureSet`; by
            default the one named by the configuration, parsed at its
            prime.
    """
    name = None
    logger = logging.getLogger('tetra.replay')

    @property
    def prime(self):
        return self.config.prime

    @property
    def seed(self):
        return self.config.seed

    @property
    def exact(self):
        """True when running at the prime the fixtures were
        transcribed for; coefficient-level checks only run then.
        """
        return self.config.prime == DEFAULT_PRIME

    def __init__(self, config, fixtures=None):
        self.config = config
        self.fixtures = fixtures or FixtureSet(config.fixtures, prime=config.prime)
        self.timings = Timings(config.timings)
        self.report = Report(self.name, config.prime, config.seed, config.strategy)

    def steps(self):
        """Return the ``(name, callable)`` pairs of this scenario."""
        raise NotImplementedError

    def run(self):
        for name, step in self.steps():
            self.logger.info("%s: %s", self.name, name)
            try:
                with self.timings.step(name):
                    step()
            except Exception as e:
                self.logger.exception("%s: step %s raised", self.name, name)
                self.report.add(name, 'completed',
                    "%s: %s" % (type(e).__name__, e), passed=False)
                break
        self.report.timings = self.timings.as_dict()
        return self.report

    def check(self, name, expected, actual, coefficients=False):
        """Record a check. Coefficient-level checks are skipped away
        from the default prime.
        """
        if coefficients and not self.exact:
            return self.report.skip(name, expected)
        passed = self.report.add(name, expected, actual)
        if not passed:
            self.logger.warning("%s: check %s failed (expected %r, got %r)",
                self.name, name, expected, actual)
        return passed

    def check_true(self, name, actual):
        return self.check(name, True, bool(actual))

    def check_ideal(self, name, expected, actual, coefficients=True):
        """Record the equality of two ideals, reported by digest."""
        if coefficients and not self.exact:
            return self.report.skip(name, digest(expected))
        passed = self.report.add(name, digest(expected), digest(actual),
            passed=(expected == actual))
        if not passed:
            self.logger.warning("%s: ideals differ in check %s", self.name, name)
        return passed

    def resample(self, what, draw):
        """Call ``draw(attempt)`` until it returns without raising
        :class:`ValueError`, at most ``RESAMPLE_LIMIT`` times.
        """
        for attempt in range(RESAMPLE_LIMIT):
            try:
                return draw(attempt)
            except ValueError as e:
                self.logger.warning("%s: resampling %s (attempt %s): %s",
                    self.name, what, attempt + 1, e)
        raise GenericityError("no general %s in %s attempts" % (what, RESAMPLE_LIMIT))

    def label(self, *parts):
        return '-'.join([self.name] + [str(x) for x in parts])

    def image(self, phi, **kwargs):
        kwargs.setdefault('strategy', self.config.strategy)
        kwargs.setdefault('seed', self.seed)
        return image(phi, **kwargs)
