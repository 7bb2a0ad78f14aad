"""Replay reports and their JSON and text renderings."""
import collections
import hashlib
import json
import numbers


SKIPPED = 'skipped'


def digest(obj):
    """First 16 hex digits of the SHA-256 of an ideal's canonical
    reduced basis, or of a string.
    """
    if hasattr(obj, 'hash_key'):
        return obj.hash_key()[:16]
    return hashlib.sha256(str(obj).encode('utf-8')).hexdigest()[:16]


def plain(value):
    """Convert `value` to JSON-native types (tuples become lists)."""
    if isinstance(value, dict):
        return collections.OrderedDict((str(k), plain(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [plain(x) for x in value]
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    return str(value)


class Check(object):

    def __init__(self, name, expected, actual, passed=None):
        self.name = name
        self.expected = plain(expected)
        self.actual = plain(actual)
        self.passed = (self.expected == self.actual) if passed is None else bool(passed)

    def as_dict(self):
        return collections.OrderedDict([
            ('name', self.name),
            ('expected', self.expected),
            ('actual', self.actual),
            ('pass', self.passed)
        ])

    def __repr__(self):
        return "Check(%s, %s)" % (self.name, 'pass' if self.passed else 'FAIL')


class Report(object):
    """The outcome of one scenario: an ordered list of checks, step
    timings and the run parameters. It passes iff every check does.

    `values` holds computed quantities other scenarios may compare
    against; it is not serialized.
    """

    def __init__(self, scenario, prime, seed, strategy):
        self.scenario = scenario
        self.prime = prime
        self.seed = seed
        self.strategy = strategy
        self.checks = []
        self.timings = {}
        self.values = {}

    def add(self, name, expected, actual, passed=None):
        check = Check(name, expected, actual, passed)
        self.checks.append(check)
        return check.passed

    def skip(self, name, expected):
        self.checks.append(Check(name, expected, SKIPPED, passed=True))
        return True

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self):
        return next((c for c in self.checks if not c.passed), None)

    def extend(self, other, prefix=None):
        """Append the checks and timings of `other`, prefixing names."""
        prefix = prefix or other.scenario
        for c in other.checks:
            self.checks.append(Check('%s.%s' % (prefix, c.name), c.expected,
                c.actual, c.passed))
        for k, v in other.timings.items():
            self.timings['%s.%s' % (prefix, k)] = v
        for k, v in other.values.items():
            self.values['%s.%s' % (prefix, k)] = v

    def as_dict(self):
        return collections.OrderedDict([
            ('scenario', self.scenario),
            ('prime', self.prime),
            ('seed', self.seed),
            ('strategy', self.strategy),
            ('checks', [c.as_dict() for c in self.checks]),
            ('timings_ms', collections.OrderedDict(self.timings)),
            ('pass', self.passed)
        ])

    def summary(self):
        failure = self.first_failure
        if failure is None:
            return "%s: pass (%s checks)" % (self.scenario, len(self.checks))
        return "%s: FAIL (first failing check: %s)" % (self.scenario, failure.name)


def emit_report(report, format='json'):
    """Serialize `report`. JSON keys keep the schema order; the text
    format has one line per check and a closing summary.
    """
    if format == 'json':
        return json.dumps(report.as_dict(), indent=2) + '\n'
    if format == 'text':
        lines = []
        for c in report.checks:
            lines.append("%s %s expected=%s actual=%s" % ('PASS' if c.passed else 'FAIL',
                c.name, json.dumps(c.expected), json.dumps(c.actual)))
        for k, v in report.timings.items():
            lines.append("TIME %s %sms" % (k, v))
        lines.append(report.summary())
        return '\n'.join(lines) + '\n'
    raise ValueError("unknown report format: %r" % format)


def write_report(report, path, format='json'):
    with open(path, 'w') as f:
        f.write(emit_report(report, format))
