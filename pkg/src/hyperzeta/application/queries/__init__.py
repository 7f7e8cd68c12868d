from .zeta_queries import *
from .sample_queries import *
