"""
Sampler queries for CQRS implementation.
"""

from dataclasses import dataclass

from shared.application.cqrs import Query

__all__ = ("SampleMixtureQuery",)


@dataclass
class SampleMixtureQuery(Query):
    """Query to draw from the weighted hyperbolic mixture Σ a_j X_j."""

    family: str
    alpha: list[float]
    a: list[float]
    count: int
    seed: int
