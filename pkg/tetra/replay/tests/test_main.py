import io
import json
import logging
import os
import unittest
import unittest.mock

import yaml

from tetra.replay.__main__ import load_config
from tetra.replay.__main__ import main
from tetra.replay.__main__ import parser
from tetra.replay.tests.base import FixtureDirMixin


class MainTestCase(FixtureDirMixin, unittest.TestCase):
    __test__ = True

    def setUp(self):
        super(MainTestCase, self).setUp()
        self.out = os.path.join(self.fixture_dir, 'report.json')
        self.handlers = list(logging.getLogger().handlers)

    def tearDown(self):
        logging.getLogger().handlers = self.handlers
        super(MainTestCase, self).tearDown()

    def run_main(self, *args):
        return main(['--scenario', 'chain', '--fixtures', self.fixture_dir,
            '--loglevel', 'CRITICAL'] + list(args))

    def load_report(self):
        with open(self.out) as f:
            return json.load(f)

    def test_passing_report(self):
        self.assertEqual(self.run_main('--out', self.out), 0)
        report = self.load_report()
        self.assertEqual(report['scenario'], 'chain')
        self.assertEqual(report['seed'], 7)
        self.assertTrue(report['pass'])

    def test_reports_are_reproducible(self):
        self.run_main('--out', self.out)
        with open(self.out) as f:
            first = f.read()
        self.run_main('--out', self.out)
        with open(self.out) as f:
            self.assertEqual(f.read(), first)

    def test_text_report_on_stdout(self):
        with unittest.mock.patch('sys.stdout', new_callable=io.StringIO) as stdout:
            self.assertEqual(self.run_main('--format', 'text'), 0)
        last = stdout.getvalue().splitlines()[-1]
        self.assertTrue(last.startswith('chain: pass'), last)

    def test_failing_check_exits_1(self):
        self.write_fixture('quadrilateral_chain.yaml', yaml.safe_dump({
            'initial': '(7; 3@p, 2@A12, 2@A03, 2@A23, 2@A13, 2@A01, 2@A02)',
            'steps': ['centers: p,A12,A03']
        }))
        self.assertEqual(self.run_main('--out', self.out), 1)
        report = self.load_report()
        self.assertFalse(report['pass'])
        self.assertEqual(report['checks'][0]['name'], 'degree_trace')
        self.assertFalse(report['checks'][0]['pass'])

    def test_invalid_prime_exits_2(self):
        self.assertEqual(self.run_main('--prime', '65535'), 2)

    def test_unknown_scenario_exits_2(self):
        with unittest.mock.patch('sys.stderr', new_callable=io.StringIO):
            with self.assertRaises(SystemExit) as cm:
                main(['--scenario', 'code3'])
        self.assertEqual(cm.exception.code, 2)

    def test_missing_fixtures_exit_2(self):
        os.remove(os.path.join(self.fixture_dir, 'manifest.yaml'))
        self.assertEqual(self.run_main('--out', self.out), 2)

    def test_unwritable_report_exits_1(self):
        out = os.path.join(self.fixture_dir, 'missing', 'report.json')
        self.assertEqual(self.run_main('--out', out), 1)


class ConfigLayeringTestCase(FixtureDirMixin, unittest.TestCase):
    __test__ = True

    def setUp(self):
        super(ConfigLayeringTestCase, self).setUp()
        self.path = os.path.join(self.fixture_dir, 'scenario.yaml')
        with open(self.path, 'w') as f:
            yaml.safe_dump({'scenario': 'lemma', 'seed': 3, 'lemma_seeds': 5}, f)

    def test_file_values(self):
        config = load_config(parser.parse_args(['--config', self.path]))
        self.assertEqual((config.name, config.seed, config.lemma_seeds), ('lemma', 3, 5))

    def test_flags_override_file(self):
        args = parser.parse_args(['--config', self.path, '--seed', '11',
            '--scenario', 'chain'])
        config = load_config(args)
        self.assertEqual((config.name, config.seed, config.lemma_seeds), ('chain', 11, 5))

    def test_defaults_without_file(self):
        config = load_config(parser.parse_args(['--scenario', 'code1']))
        self.assertEqual((config.seed, config.strategy), (7, 'interpolation'))
        self.assertFalse(config.cross_check)
