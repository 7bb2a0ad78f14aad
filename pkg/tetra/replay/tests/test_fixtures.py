import os
import unittest

from tetra.const import ENV_FIXTURES
from tetra.cremona import Chain
from tetra.replay import FixtureSet
from tetra.replay.exc import FixtureError
from tetra.replay.fixtureset import FIXTURE_DIR
from tetra.replay.tests.base import FixtureDirMixin


class PackagedFixturesTestCase(unittest.TestCase):

    def setUp(self):
        self.fixtures = FixtureSet(FIXTURE_DIR)

    def test_every_entry_loads(self):
        for entry in self.fixtures.entries.values():
            loader = getattr(self.fixtures, entry.kind)
            self.assertIsNotNone(loader(entry.name), entry.name)

    def test_quadrics(self):
        W = self.fixtures.ideal('w13_quadrics')
        self.assertEqual(len(W.generators), 42)
        self.assertEqual(W.ring.nvars, 14)

    def test_maps(self):
        pi = self.fixtures.map('pi')
        self.assertEqual(pi.name, 'pi')
        self.assertEqual((pi.source.nvars, pi.target.nvars, pi.degree), (6, 14, 6))
        nu = self.fixtures.map('nu')
        self.assertEqual((nu.source.nvars, nu.target.nvars, nu.degree), (4, 14, 6))

    def test_chain(self):
        chain = self.fixtures.chain('quadrilateral_chain')
        self.assertIsInstance(chain, Chain)
        self.assertEqual(len(chain.steps), 3)

    def test_loads_are_cached(self):
        self.assertIs(self.fixtures.ideal('r1'), self.fixtures.ideal('r1'))

    def test_prime_override(self):
        fixtures = FixtureSet(FIXTURE_DIR, prime=65537)
        self.assertEqual(fixtures.ideal('r2').ring.prime, 65537)
        self.assertEqual(fixtures.map('q').source.prime, 65537)

    def test_wrong_kind(self):
        with self.assertRaises(FixtureError):
            self.fixtures.map('r1')

    def test_unknown_name(self):
        with self.assertRaises(FixtureError):
            self.fixtures.ideal('r4')


class FixtureDirectoryTestCase(FixtureDirMixin, unittest.TestCase):
    __test__ = True
    fixture_names = ('r1', 'quadrilateral_chain')

    def tearDown(self):
        os.environ.pop(ENV_FIXTURES, None)
        super(FixtureDirectoryTestCase, self).tearDown()

    def test_environment_override(self):
        os.environ[ENV_FIXTURES] = self.fixture_dir
        fixtures = FixtureSet()
        self.assertEqual(fixtures.path, self.fixture_dir)
        self.assertEqual(sorted(fixtures.entries), ['quadrilateral_chain', 'r1'])

    def test_explicit_path_wins(self):
        os.environ[ENV_FIXTURES] = self.fixture_dir
        self.assertEqual(FixtureSet(FIXTURE_DIR).path, FIXTURE_DIR)

    def test_missing_manifest(self):
        os.remove(os.path.join(self.fixture_dir, 'manifest.yaml'))
        with self.assertRaises(FixtureError):
            FixtureSet(self.fixture_dir)

    def test_invalid_manifest(self):
        self.write_fixture('manifest.yaml', 'fixtures: []\n')
        with self.assertRaises(FixtureError):
            FixtureSet(self.fixture_dir)

    def test_missing_file(self):
        os.remove(os.path.join(self.fixture_dir, 'r1.ideal'))
        with self.assertRaises(FixtureError):
            FixtureSet(self.fixture_dir).ideal('r1')

    def test_unparsable_file(self):
        self.write_fixture('r1.ideal', 'ring p=10000019 vars=s_0..s_3\ns_0^(-1)\n')
        with self.assertRaises(FixtureError):
            FixtureSet(self.fixture_dir).ideal('r1')

    def test_invalid_chain(self):
        self.write_fixture('quadrilateral_chain.yaml', 'initial: "(6; 3@p)"\nsteps: [bogus]\n')
        with self.assertRaises(FixtureError):
            FixtureSet(self.fixture_dir).chain('quadrilateral_chain')
