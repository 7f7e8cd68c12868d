from .zeta_cqrs_service import *
