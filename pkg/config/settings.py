"""
Application configuration settings.

Centralized configuration using Pydantic Settings for type safety and validation.

Decision: Domain engines never read these values directly. They take explicit
budget/cap arguments and the application layer passes the configured values in,
so the engines stay testable with any limits.
"""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    # Application
    app_name: str = "follower-sets"
    app_version: str = "1.0.0"
    log_level: str = "INFO"

    # API
    api_host: str = "0.0.0.0"
    api_port: int = 8000
    api_reload: bool = False

    # Engine budgets
    updown_max_n: int = 12
    profile_budget: int = 2**20
    automaton_node_budget: int = 10_000
    default_depth: int = 4
    sgap_default_cutoff: int = 64


# Global settings instance
settings = Settings()
