import os
import shutil
import tempfile

import yaml

from tetra.replay.fixtureset import FIXTURE_DIR


class FixtureDirMixin(object):
    """Creates a private fixture directory holding a copy of the
    packaged manifest entries named in `fixture_names`.
    """
    __test__ = False
    fixture_names = ('quadrilateral_chain',)

    def setUp(self):
        self.fixture_dir = tempfile.mkdtemp()
        with open(os.path.join(FIXTURE_DIR, 'manifest.yaml')) as f:
            manifest = yaml.safe_load(f)
        entries = [x for x in manifest['fixtures'] if x['name'] in self.fixture_names]
        for entry in entries:
            shutil.copy(os.path.join(FIXTURE_DIR, entry['file']), self.fixture_dir)
        self.write_manifest(entries)

    def tearDown(self):
        shutil.rmtree(self.fixture_dir)

    def write_manifest(self, entries):
        with open(os.path.join(self.fixture_dir, 'manifest.yaml'), 'w') as f:
            yaml.safe_dump({'fixtures': entries}, f)

    def write_fixture(self, filename, content):
        with open(os.path.join(self.fixture_dir, filename), 'w') as f:
            f.write(content)
