"""
Self-check Query Handlers for CQRS implementation
"""

from __future__ import annotations

from injector import inject

from hyperzeta.application.dtos import SelfCheckReportDTO
from hyperzeta.application.queries import SelfCheckQuery
from hyperzeta.application.services import SelfCheckService
from hyperzeta.domain.entities import QuadConfig
from shared.application.cqrs import QueryHandler

__all__ = ("SelfCheckQueryHandler",)


class SelfCheckQueryHandler(QueryHandler[SelfCheckQuery, SelfCheckReportDTO]):
    """Handle SelfCheck query; failed checks are reported, never raised."""

    @inject
    def __init__(self, service: SelfCheckService, quad_config: QuadConfig) -> None:
        self.service = service
        self.quad_config = quad_config

    def handle(self, query: SelfCheckQuery) -> SelfCheckReportDTO:
        quad_config = self.quad_config.tightened(abs_tol=query.abs_tol, rel_tol=query.rel_tol)
        return self.service.run(quad_config, fast=query.fast, only=query.only)
