from marshmallow import fields
from marshmallow import validate
from marshmallow import validates
from marshmallow import ValidationError
import marshmallow
import sympy

from tetra.const import DEFAULT_FORMAT
from tetra.const import DEFAULT_PRIME
from tetra.const import DEFAULT_SEED
from tetra.const import DEFAULT_STRATEGY
from tetra.const import SCENARIOS
from tetra.const import STRATEGIES
from tetra.replay.config import Scenario
from tetra.replay.config import Fixture
from tetra.replay.config import KINDS


class ScenarioSchema(marshmallow.Schema):
    name = fields.String(
        required=True,
        validate=[
            validate.OneOf(list(SCENARIOS) + ['all'])
        ],
        data_key='scenario'
    )

    prime = fields.Integer(
        required=False,
        load_default=DEFAULT_PRIME
    )

    seed = fields.Integer(
        required=False,
        load_default=DEFAULT_SEED
    )

    strategy = fields.String(
        required=False,
        load_default=DEFAULT_STRATEGY,
        validate=[
            validate.OneOf(STRATEGIES)
        ]
    )

    out = fields.String(
        required=False,
        load_default=None,
        allow_none=True
    )

    format = fields.String(
        required=False,
        load_default=DEFAULT_FORMAT,
        validate=[
            validate.OneOf(['json', 'text'])
        ]
    )

    jobs = fields.Integer(
        required=False,
        load_default=1,
        validate=[
            validate.Range(min=1)
        ]
    )

    timings = fields.Boolean(
        required=False,
        load_default=False
    )

    cross_check = fields.Boolean(
        required=False,
        load_default=False
    )

    lemma_seeds = fields.Integer(
        required=False,
        load_default=20,
        validate=[
            validate.Range(min=1)
        ]
    )

    fixtures = fields.String(
        required=False,
        load_default=None,
        allow_none=True
    )

    @validates('prime')
    def validate_prime(self, value, **kwargs):
        if value == 2 or not sympy.isprime(value):
            raise ValidationError("the modulus must be an odd prime")

    def load(self, *args, **kwargs):
        params = super(ScenarioSchema, self).load(*args, **kwargs)
        return Scenario(**params)


class FixtureSchema(marshmallow.Schema):
    name = fields.String(
        required=True
    )

    kind = fields.String(
        required=True,
        validate=[
            validate.OneOf(KINDS)
        ]
    )

    path = fields.String(
        required=True,
        data_key='file'
    )

    describes = fields.String(
        required=False,
        load_default=''
    )

    def load(self, *args, **kwargs):
        params = super(FixtureSchema, self).load(*args, **kwargs)
        return Fixture(**params)\
            if not self.many\
            else [Fixture(**x) for x in params]


class ManifestSchema(marshmallow.Schema):
    fixtures = fields.List(
        fields.Nested(FixtureSchema),
        required=True,
        validate=[
            validate.Length(min=1)
        ]
    )
