"""Configuración - Parámetros del toolkit leídos del entorno (prefijo COMPNET_)."""

from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent


class Settings(BaseSettings):
    """
    Configuración global.

    Los valores se toman de variables de entorno `COMPNET_*` o de un archivo
    `.env`; los flags de la CLI los sobreescriben en cada invocación.
    """

    model_config = SettingsConfigDict(
        env_prefix="COMPNET_",
        env_file=".env",
        extra="ignore",
    )

    data_dir: Path = PROJECT_ROOT / "data"
    bronze_dir: Optional[Path] = None
    silver_dir: Optional[Path] = None
    gold_dir: Optional[Path] = None

    log_level: str = "INFO"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    jobs: int = Field(default=1, ge=1)

    jw_prefix_scale: float = Field(default=0.1, ge=0.0, le=0.25)
    jw_max_prefix: int = Field(default=4, ge=0)

    name_source: str = "element"
    fold_case: bool = False
    vacuous_links: bool = False
    count_exact_co_occurrence: bool = False
    strict: bool = False

    t_start: float = Field(default=0.0, ge=0.0, le=1.0)
    t_end: float = Field(default=1.0, ge=0.0, le=1.0)
    t_step: float = Field(default=0.01, gt=0.0)

    @model_validator(mode="after")
    def _derive_layers(self) -> "Settings":
        # bronze/silver/gold cuelgan de data_dir salvo que se indiquen
        if self.bronze_dir is None:
            self.bronze_dir = self.data_dir / "bronze"
        if self.silver_dir is None:
            self.silver_dir = self.data_dir / "silver"
        if self.gold_dir is None:
            self.gold_dir = self.data_dir / "gold"
        return self


@lru_cache
def get_settings() -> Settings:
    """Retorna la configuración (se construye una sola vez por proceso)."""
    return Settings()
