"""Global conftest for entire project."""

import logging

from hypothesis import HealthCheck, settings

logger = logging.getLogger(__file__)

# numerical properties evaluate quadratures; keep example counts modest
settings.register_profile(
    "hyperzeta",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("hyperzeta")
