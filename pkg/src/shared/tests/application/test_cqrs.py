"""Test the query bus"""

from dataclasses import dataclass

import pytest
from injector import Injector

from shared.application.cqrs import Query, QueryBus, QueryHandler
from shared.application.exceptions import ApplicationConfigurationError


@dataclass
class EchoQuery(Query):
    text: str


@dataclass
class UnboundQuery(Query):
    pass


class EchoQueryHandler(QueryHandler[EchoQuery, str]):
    def handle(self, query: EchoQuery) -> str:
        return query.text.upper()


@pytest.fixture
def query_bus() -> QueryBus:
    bus = QueryBus()
    bus._injector = Injector()
    bus.register_handler(EchoQuery, EchoQueryHandler)
    return bus


@pytest.mark.application
@pytest.mark.unit
class TestQueryBus:
    """Test registering and dispatching queries"""

    def test_dispatch(self, query_bus: QueryBus) -> None:
        assert query_bus.dispatch(EchoQuery(text="zeta")) == "ZETA"

    def test_queries_get_an_identity(self) -> None:
        # Act
        first, second = EchoQuery(text="a"), EchoQuery(text="a")

        # Assert
        assert first.query_id != second.query_id

    def test_unregistered_query(self, query_bus: QueryBus) -> None:
        with pytest.raises(ApplicationConfigurationError):
            query_bus.dispatch(UnboundQuery())
