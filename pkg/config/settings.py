"""Application settings loaded from environment."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Pydantic BaseSettings for env-based config. Scenario numerics live in scenario files, not here."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="NASHSIM_",
        extra="ignore",
    )

    log_level: str = "INFO"
    output_dir: str = "./runs"
    sweep_workers: int = 4
    verify_grid_points: int = 2001
    verify_eps: float = 1e-6
    default_topology: str = "ring"


settings = Settings()
