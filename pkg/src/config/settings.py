"""
Settings for hyperzeta.

Every tunable is read from the environment (or a .env file) through
python-decouple; variables share the HYPERZETA_ prefix.
"""

import os

from decouple import config

# quadrature defaults
ABS_TOL = config("HYPERZETA_ABS_TOL", default=1e-10, cast=float)
REL_TOL = config("HYPERZETA_REL_TOL", default=1e-10, cast=float)
MAX_DEPTH = config("HYPERZETA_MAX_DEPTH", default=18, cast=int)
NODES_PER_PANEL = config("HYPERZETA_NODES_PER_PANEL", default=15, cast=int)
INITIAL_RADIUS = config("HYPERZETA_INITIAL_RADIUS", default=8.0, cast=float)

# direct summation defaults
TAIL_TOL = config("HYPERZETA_TAIL_TOL", default=1e-4, cast=float)
CUTOFF_R1 = config("HYPERZETA_CUTOFF_R1", default=2000, cast=int)
CUTOFF_R2 = config("HYPERZETA_CUTOFF_R2", default=700, cast=int)
CUTOFF_R3 = config("HYPERZETA_CUTOFF_R3", default=150, cast=int)

# singularity handling
POLE_RADIUS = config("HYPERZETA_POLE_RADIUS", default=1e-9, cast=float)
MIN_ABS_C = config("HYPERZETA_MIN_ABS_C", default=1e-6, cast=float)
N_MAX = config("HYPERZETA_N_MAX", default=20, cast=int)

# grid sweeps
WORKERS = config("HYPERZETA_WORKERS", default=int(os.cpu_count() or 1), cast=int)
MAX_GRID_POINTS = config("HYPERZETA_MAX_GRID_POINTS", default=100_000, cast=int)

# Monte Carlo draws used by the self-check suite
MC_COUNT = config("HYPERZETA_MC_COUNT", default=1_000_000, cast=int)
SELFCHECK_SEED = config("HYPERZETA_SELFCHECK_SEED", default=20240531, cast=int)

LOG_LEVEL = config("HYPERZETA_LOG_LEVEL", default="WARNING")

# injector modules loaded by shared.infrastructure.ioc
INJECTOR_MODULES = [
    "hyperzeta.infrastructure.ioc.HyperZetaModule",
]

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {module} {process:d} {thread:d} {message}",
            "style": "{",
        },
        "simple": {
            "format": "{levelname} {name} {message}",
            "style": "{",
        },
    },
    "handlers": {
        # stdout carries JSON/CSV payloads, so logs always go to stderr
        "console": {
            "level": LOG_LEVEL,
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "simple",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": LOG_LEVEL,
    },
    "loggers": {
        "hyperzeta": {
            "handlers": ["console"],
            "level": LOG_LEVEL,
            "propagate": False,
        },
    },
}
