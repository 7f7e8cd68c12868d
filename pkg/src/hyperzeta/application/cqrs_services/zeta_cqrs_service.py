"""
CQRS Service for hyperzeta.
"""

from hyperzeta.application.queries import sample_queries, zeta_queries
from hyperzeta.application.query_handlers import (
    sample_query_handlers,
    selfcheck_query_handlers,
    zeta_query_handlers,
)
from shared.application.cqrs import register_query_handler

# register queries
register_query_handler(
    zeta_queries.EvaluateZetaQuery, zeta_query_handlers.EvaluateZetaQueryHandler
)
register_query_handler(
    zeta_queries.PoleReportQuery, zeta_query_handlers.PoleReportQueryHandler
)
register_query_handler(
    zeta_queries.GridSweepQuery, zeta_query_handlers.GridSweepQueryHandler
)
register_query_handler(
    zeta_queries.SelfCheckQuery, selfcheck_query_handlers.SelfCheckQueryHandler
)
register_query_handler(
    sample_queries.SampleMixtureQuery, sample_query_handlers.SampleMixtureQueryHandler
)
