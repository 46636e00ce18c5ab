# app/config.py
"""
Toolkit configuration from environment variables.
"""

from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache


class Settings(BaseSettings):
    """Toolkit settings loaded from the environment (prefix GRAND_) or a .env file."""

    # App
    APP_NAME: str = "ORBGRAND Toolkit"
    DEBUG: bool = False

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "plain"  # plain | json

    # Decoding
    DEFAULT_MAX_QUERIES: int = 5_000_000
    DEFAULT_SEGMENTS: int = 3

    # Campaigns
    DEFAULT_SEED: int = 2021
    DEFAULT_WORKERS: int = 1
    TRIAL_CHUNK: int = 50
    PROGRESS_BAR: bool = True
    CSV_TIMING: bool = True

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="GRAND_",
        case_sensitive=False,
        extra="ignore",  # Ignore extra fields from .env
    )


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Uses LRU cache to avoid re-reading .env file on every call.

    Returns:
        Settings: Toolkit configuration
    """
    return Settings()
