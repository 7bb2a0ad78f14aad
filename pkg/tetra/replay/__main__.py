#!/usr/bin/env python3
import argparse
import logging
import sys

import marshmallow
import yaml

from tetra.const import SCENARIOS
from tetra.const import STRATEGIES
from tetra.replay.exc import FixtureError
from tetra.replay.exc import UnknownScenario
from tetra.replay.report import emit_report
from tetra.replay.report import write_report
from tetra.replay.runner import run_scenario
from tetra.replay.schema import ScenarioSchema


parser = argparse.ArgumentParser(
    prog='tetra-replay',
    description="Replay the computations on the tetrahedron sextics and report every check.")
parser.add_argument('--scenario', choices=list(SCENARIOS) + ['all'],
    help="specifies the scenario to run.")
parser.add_argument('--prime', type=int,
    help="specifies the modulus (default: 10000019)")
parser.add_argument('--seed', type=int,
    help="specifies the seed of every random choice (default: 7)")
parser.add_argument('--strategy', choices=STRATEGIES,
    help="specifies how images of maps are computed (default: interpolation)")
parser.add_argument('--out',
    help="write the report to this path instead of stdout.")
parser.add_argument('--format', choices=['json', 'text'],
    help="specifies the report format (default: json)")
parser.add_argument('--jobs', type=int,
    help="run independent scenarios in this many processes (default: 1)")
parser.add_argument('--lemma-seeds', dest='lemma_seeds', type=int,
    help="number of planes checked by the lemma scenario (default: 20)")
parser.add_argument('--fixtures',
    help="specifies the fixture directory (default: $TETRA_FIXTURES or the packaged fixtures)")
parser.add_argument('--config',
    help="read scenario parameters from this YAML file; flags take precedence.")
parser.add_argument('--timings', action='store_true', default=None,
    help="include wall-clock milliseconds per step in the report.")
parser.add_argument('--cross-check', dest='cross_check', action='store_true', default=None,
    help="also compute the toric image of the quotient map.")
parser.add_argument('--loglevel', default='INFO',
    choices=['DEBUG','INFO','WARNING','ERROR','CRITICAL'],
    help="specifies the logging verbosity (default: %(default)s)")

OPTIONS = ('scenario', 'prime', 'seed', 'strategy', 'out', 'format', 'jobs',
    'lemma_seeds', 'fixtures', 'timings', 'cross_check')


def configure_logging(loglevel, stream):
    # The report owns stdout unless it is written to a file.
    level = getattr(logging, loglevel)
    logger = logging.getLogger()
    handler = logging.StreamHandler(stream)
    fmt = logging.Formatter(
        "%(asctime)s [%(process)d] [%(levelname)s] %(message)s",
        datefmt="[%Y-%m-%d %H:%M:%S %z]")
    handler.setFormatter(fmt)
    handler.setLevel(level)
    logger.addHandler(handler)
    logger.setLevel(level)
    return logger


def load_config(args):
    """Layer the YAML configuration file, if any, under the flags and
    validate the result.
    """
    params = {}
    if args.config:
        with open(args.config) as f:
            params.update(yaml.safe_load(f) or {})
    for name in OPTIONS:
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    return ScenarioSchema().load(params)


def main(argv=None):
    args = parser.parse_args(argv)
    try:
        config = load_config(args)
    except (IOError, yaml.YAMLError) as e:
        sys.stderr.write("cannot read configuration: %s\n" % e)
        return 2
    except marshmallow.ValidationError as e:
        sys.stderr.write("invalid configuration: %s\n" % e.messages)
        return 2
    logger = configure_logging(args.loglevel,
        sys.stdout if config.out else sys.stderr)
    try:
        report = run_scenario(config)
    except (FixtureError, UnknownScenario) as e:
        logger.error("%s", e)
        return 2
    if config.out:
        try:
            write_report(report, config.out, config.format)
        except IOError as e:
            logger.error("cannot write report to %s: %s", config.out, e)
            return 1
        logger.info("Report written to %s", config.out)
    else:
        sys.stdout.write(emit_report(report, config.format))
    if not report.passed:
        logger.error("First failing check: %s", report.first_failure.name)
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
