import collections
import contextlib
import time


def now():
    """Return a monotonic timestamp in milliseconds."""
    return int(time.perf_counter() * 1000)


class Timings(object):
    """Collects wall-clock durations, in milliseconds, keyed by step
    name. Steps that run more than once accumulate.
    """

    def __init__(self, enabled=True):
        self.enabled = enabled
        self.steps = collections.OrderedDict()

    @contextlib.contextmanager
    def step(self, name):
        started = now()
        try:
            yield
        finally:
            if self.enabled:
                self.steps[name] = self.steps.get(name, 0)\
                    + (now() - started)

    def as_dict(self):
        return dict(self.steps) if self.enabled else {}
