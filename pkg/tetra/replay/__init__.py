from tetra.replay.config import Fixture
from tetra.replay.config import Scenario
from tetra.replay.fixtureset import FixtureSet
from tetra.replay.report import Check
from tetra.replay.report import Report
from tetra.replay.report import digest
from tetra.replay.report import emit_report
from tetra.replay.schema import ScenarioSchema
from tetra.replay.base import BaseScenario
from tetra.replay.runner import REGISTRY
from tetra.replay.runner import run_all
from tetra.replay.runner import run_scenario
