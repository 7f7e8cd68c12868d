"""
Sampler Query Handlers for CQRS implementation
"""

from __future__ import annotations

import logging

from hyperzeta.application.dtos import SampleDTO
from hyperzeta.application.queries import SampleMixtureQuery
from hyperzeta.domain.entities import Family, MixtureSpec
from hyperzeta.domain.services import hyperdist
from shared.application.cqrs import QueryHandler
from shared.application.exception_mapper import map_domain_exception_to_application
from shared.domain.exceptions import DomainException

__all__ = ("SampleMixtureQueryHandler",)

logger = logging.getLogger(__name__)


class SampleMixtureQueryHandler(QueryHandler[SampleMixtureQuery, SampleDTO]):
    """Handle SampleMixture query."""

    def handle(self, query: SampleMixtureQuery) -> SampleDTO:
        try:
            family = Family.from_string(query.family)
            spec = MixtureSpec(family, zip(query.a, query.alpha))
            draws = hyperdist.sample(spec, query.count, query.seed)
        except DomainException as e:
            raise map_domain_exception_to_application(
                e, details={"family": query.family}
            ) from e

        return SampleDTO(family=family.value, seed=query.seed, draws=draws.tolist())
