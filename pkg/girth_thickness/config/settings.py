from pathlib import Path

from pydantic_settings import BaseSettings

PACKAGE_DIR = Path(__file__).resolve().parent.parent


class Settings(BaseSettings):
    # Fixtures
    fixtures_dir: str = str(PACKAGE_DIR / "fixtures")

    # Verification
    violation_cap: int = 100
    witness_max_order: int = 8

    # Search defaults
    search_node_budget: int = 100_000
    search_time_budget: float = 60.0
    search_seed: int = 0
    time_check_interval: int = 4096

    # K_10 experiment
    k10_log_path: str = "./k10-log.jsonl"

    # Logging
    log_level: str = "INFO"

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        env_prefix = "GIRTH_"

    @property
    def fixtures_path(self) -> Path:
        """Resolve the fixtures directory as a Path."""
        return Path(self.fixtures_dir)


settings = Settings()
