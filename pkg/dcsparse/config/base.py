from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class DcSparseSettings(BaseSettings):
    """
    Process-wide settings for dcsparse
    Read from the environment and an optional .env file
    """

    # Logging
    LOGGING_ENABLED: bool = True
    LOG_LEVEL: str = "WARNING"
    LOG_TO_FILE: bool = False
    LOG_FILE_PATH: str = "logs/dcsparse.log"

    # Colored console logs instead of JSON
    DEBUG: bool = False

    # Upper bound on concurrently running replicates
    DC_SPARSE_THREADS: int = Field(default=1, ge=1)

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )


@lru_cache(maxsize=1)
def get_settings() -> DcSparseSettings:
    """Cached settings instance; call get_settings.cache_clear() after changing the environment"""
    return DcSparseSettings()
