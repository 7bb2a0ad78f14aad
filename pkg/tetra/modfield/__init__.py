from tetra.modfield.field import Field
from tetra.modfield.field import FieldScalar
from tetra.modfield.field import egcd
from tetra.modfield.field import get_field
from tetra.modfield.field import inv
from tetra.modfield.field import inverse_mod
from tetra.modfield.matrix import FMatrix
from tetra.modfield.matrix import row_reduce
