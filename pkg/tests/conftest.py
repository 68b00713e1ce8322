"""Shared fixtures for the workbench test suite."""

import pytest
from loguru import logger

from app.core.settings import get_app_settings


@pytest.fixture(autouse=True)
def _quiet_loguru():
    """Drop loguru sinks so stderr output never mixes into captured reports."""
    logger.remove()
    yield
    logger.remove()


@pytest.fixture(autouse=True)
def _fresh_settings():
    """Re-read settings from the environment for every test."""
    get_app_settings.cache_clear()
    yield
    get_app_settings.cache_clear()
