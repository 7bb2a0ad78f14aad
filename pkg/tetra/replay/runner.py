import concurrent.futures
import logging

from tetra.const import SCENARIOS
from tetra.replay.chain import ChainScenario
from tetra.replay.code1 import Code1Scenario
from tetra.replay.code2 import Code2Scenario
from tetra.replay.exc import UnknownScenario
from tetra.replay.lemma import LemmaScenario
from tetra.replay.report import Report


logger = logging.getLogger('tetra.replay')

REGISTRY = {cls.name: cls for cls in (Code1Scenario, Code2Scenario,
    LemmaScenario, ChainScenario)}


def get_scenario(name):
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownScenario(name)


def run_scenario(config, fixtures=None):
    """Run the scenario named by `config` and return its
    :class:`~tetra.replay.report.Report`.
    """
    if config.name == 'all':
        return run_all(config, fixtures)
    cls = get_scenario(config.name)
    logger.info("Running scenario %s (prime %s, seed %s, strategy %s)",
        config.name, config.prime, config.seed, config.strategy)
    report = cls(config, fixtures).run()
    if report.passed:
        logger.info("Scenario %s passed %s checks", config.name, len(report.checks))
    else:
        logger.error("Scenario %s failed check %s", config.name,
            report.first_failure.name)
    return report


def scenario_configs(config, fixtures=None):
    """One config per scenario, in report order. For more than one job
    the fixture directory travels in the config.
    """
    configs = [config.replace(name=name) for name in SCENARIOS]
    if config.jobs > 1 and fixtures is not None:
        configs = [c.replace(fixtures=fixtures.path) for c in configs]
    return configs


def run_all(config, fixtures=None):
    """Run every scenario and merge the reports in a fixed order.
    Scenarios may run in `config.jobs` processes; steps within one
    scenario always run in order. Worker processes reopen `fixtures`
    from its directory.
    """
    configs = scenario_configs(config, fixtures)
    if config.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(config.jobs) as pool:
            reports = list(pool.map(run_scenario, configs))
    else:
        reports = [run_scenario(c, fixtures) for c in configs]
    merged = Report('all', config.prime, config.seed, config.strategy)
    for report in reports:
        merged.extend(report)
    expected = merged.values.get('chain.self_intersection')
    actual = merged.values.get('code2.delta_degree')
    merged.add('cross.delta_degree_equals_self_intersection', expected, actual,
        passed=(expected is not None and expected == actual))
    return merged
