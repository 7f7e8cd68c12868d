from .zeta_query_handlers import *
from .sample_query_handlers import *
from .selfcheck_query_handlers import *
