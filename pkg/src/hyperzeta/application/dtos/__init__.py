from .zeta_dtos import *
from .selfcheck_dtos import *
