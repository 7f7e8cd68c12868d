from .selfcheck_service import *
