from tetra.cremona.system import PlaneLinearSystem
from tetra.cremona.system import SystemInvariants
from tetra.cremona.system import quadratic_transform
from tetra.cremona.system import system_invariants
from tetra.cremona.chain import Chain
from tetra.cremona.chain import ChainStep
from tetra.cremona.chain import degree_trace
from tetra.cremona.chain import invariant_trace
from tetra.cremona.chain import parse_chain_script
from tetra.cremona.chain import quadrilateral_chain
from tetra.cremona.chain import run_chain
from tetra.cremona.divisor import BASIS
from tetra.cremona.divisor import DivisorClass
from tetra.cremona.divisor import canonical_class
from tetra.cremona.divisor import class_sum
from tetra.cremona.divisor import edge_quadric_class
from tetra.cremona.divisor import sigma_class
from tetra.cremona.schema import ChainSchema
