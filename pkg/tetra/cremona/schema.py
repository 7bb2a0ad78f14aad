from marshmallow import fields
from marshmallow import validates
from marshmallow import ValidationError
import marshmallow

from tetra.cremona.chain import Chain
from tetra.cremona.chain import ChainStep
from tetra.cremona.exc import ChainScriptError
from tetra.cremona.system import PlaneLinearSystem


class ChainSchema(marshmallow.Schema):
    """A YAML chain document::

        initial: "(6; 3@p, 2@A12, ...)"
        steps:
        - "centers: p,A12,A03 ; relabel: p=p',A12=B12"
    """
    name = fields.String(
        required=False,
        load_default=None
    )

    initial = fields.String(
        required=True
    )

    steps = fields.List(
        fields.String(),
        required=True
    )

    @validates('initial')
    def validate_initial(self, value, **kwargs):
        try:
            PlaneLinearSystem.parse(value)
        except ChainScriptError as e:
            raise ValidationError(str(e))

    @validates('steps')
    def validate_steps(self, value, **kwargs):
        for line in value:
            try:
                ChainStep.parse(line)
            except ChainScriptError as e:
                raise ValidationError(str(e))

    def load(self, *args, **kwargs):
        params = super(ChainSchema, self).load(*args, **kwargs)
        params.pop('name', None)
        return Chain(**params)\
            if not self.many\
            else [Chain(initial=x['initial'], steps=x['steps']) for x in params]
