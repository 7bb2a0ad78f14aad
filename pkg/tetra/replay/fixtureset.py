import logging
import os

import marshmallow
import yaml

from tetra.const import ENV_FIXTURES
from tetra.cremona import ChainSchema
from tetra.groebner import Ideal
from tetra.replay.exc import FixtureError
from tetra.replay.schema import ManifestSchema
from tetra.varmap import RationalMap


FIXTURE_DIR = os.path.join(os.path.dirname(__file__), 'fixtures')

MANIFEST = 'manifest.yaml'


class FixtureSet(object):
    """The transcribed reference objects, read from a fixture directory
    through its manifest. Every ideal and map is parsed at `prime`.
    """
    logger = logging.getLogger('tetra.replay')

    def __init__(self, path=None, prime=None):
        self.path = os.path.abspath(path or os.getenv(ENV_FIXTURES) or FIXTURE_DIR)
        self.prime = prime
        self.entries = {x.name: x for x in self.load_manifest()}
        self._cache = {}

    def abspath(self, *args):
        return os.path.join(self.path, *args)

    def load_manifest(self):
        src = self.abspath(MANIFEST)
        if not os.path.exists(src):
            raise FixtureError("no fixture manifest at %s" % src)
        with open(src) as f:
            document = yaml.safe_load(f)
        try:
            return ManifestSchema().load(document or {})['fixtures']
        except marshmallow.ValidationError as e:
            raise FixtureError("invalid manifest %s: %s" % (src, e.messages))

    def get(self, name, kind):
        try:
            entry = self.entries[name]
        except KeyError:
            raise FixtureError("unknown fixture: %s" % name)
        if entry.kind != kind:
            raise FixtureError("fixture %s is a %s, not a %s" % (name, entry.kind, kind))
        src = self.abspath(entry.path)
        if not os.path.exists(src):
            raise FixtureError("fixture file %s does not exist" % src)
        return src

    def _load(self, name, kind, loader):
        key = (name, kind)
        if key not in self._cache:
            src = self.get(name, kind)
            self.logger.debug("Loading fixture %s from %s", name, src)
            try:
                self._cache[key] = loader(src)
            except ValueError as e:
                raise FixtureError("cannot parse %s: %s" % (src, e))
        return self._cache[key]

    def ideal(self, name):
        return self._load(name, 'ideal', lambda src: Ideal.from_file(src, prime=self.prime))

    def map(self, name):
        return self._load(name, 'map',
            lambda src: RationalMap.from_file(src, prime=self.prime, name=name))

    def chain(self, name):
        def loader(src):
            with open(src) as f:
                document = yaml.safe_load(f)
            try:
                return ChainSchema().load(document or {})
            except marshmallow.ValidationError as e:
                raise ValueError(str(e.messages))
        return self._load(name, 'chain', loader)
