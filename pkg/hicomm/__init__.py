from . import elements
from . import algebras
from . import convert
from . import cube
from . import congruence
from . import matrices
from . import commutator
from . import series
from . import utils
from . import verify
from .options import set_options, load_options, OPTIONS

__version__ = '0.1dev'
