"""
Inversion of Control in hyperzeta layer.
"""

from injector import Binder, Module, singleton

from hyperzeta.application.services import ExtraCheckProvider, SelfCheckService
from hyperzeta.domain.entities import QuadConfig, SeriesConfig
from hyperzeta.infrastructure.cli.golden import CliGoldenChecks


class HyperZetaModule(Module):
    def configure(self, binder: Binder) -> None:
        quad_config = QuadConfig.default()
        binder.bind(QuadConfig, to=quad_config)
        binder.bind(SeriesConfig, to=SeriesConfig.default(expectation_cfg=quad_config))
        binder.bind(ExtraCheckProvider, to=CliGoldenChecks)
        binder.bind(SelfCheckService, to=SelfCheckService, scope=singleton)
