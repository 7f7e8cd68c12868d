"""
This is inversion of control manager of infrastructure.
"""

import importlib
import logging
import threading

from injector import Injector, Module

from config import settings
from shared.application.exceptions import ApplicationConfigurationError

__all__ = (
    "get_injector",
    "reset_injector",
    "load_modules",
)

logger = logging.getLogger(__name__)

_injector: Injector | None = None
_lock = threading.Lock()


def load_modules(paths: list[str] | None = None) -> list[Module]:
    """
    Import and instantiate the injector modules listed in settings.INJECTOR_MODULES.
    """

    modules = []
    for dotted_path in paths if paths is not None else settings.INJECTOR_MODULES:
        module_path, _, class_name = dotted_path.rpartition(".")
        try:
            module_class = getattr(importlib.import_module(module_path), class_name)
        except (ImportError, AttributeError) as e:
            raise ApplicationConfigurationError(
                f"cannot load injector module {dotted_path}: {e}",
                details={"module": dotted_path},
            ) from e
        modules.append(module_class())
        logger.debug(f"loaded injector module {dotted_path}")

    return modules


def get_injector() -> Injector:
    """
    Returns the default injector that all Injector Modules are managed by it.
    """

    global _injector
    if _injector is None:
        with _lock:
            if _injector is None:
                _injector = Injector(load_modules())
    return _injector


def reset_injector() -> None:
    """Drop the default injector; the next get_injector() call builds a fresh one."""

    global _injector
    with _lock:
        _injector = None
