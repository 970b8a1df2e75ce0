"""Configuration centralisée avec Pydantic Settings."""

from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Configuration de l'application."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "Solveur d'assortiment MMNL"
    app_version: str = "1.0.0"
    debug: bool = False
    log_level: str = "INFO"

    # Solveur
    solver_backend: str = Field(
        default="cbc",
        description="Backend MILP utilisé par défaut (cbc, gurobi)",
    )
    default_epsilon: float = Field(default=1e-6, gt=0, description="Écart d'optimalité relatif")
    default_time_limit: float = Field(
        default=3600.0,
        gt=0,
        description="Limite de temps par résolution en secondes",
    )
    threads: int = Field(default=1, ge=1, description="Threads délégués au backend")
    bound_mode: str = Field(
        default="auto",
        description="Mode de calcul des bornes conditionnelles (exact, relaxed, auto)",
    )
    cut_tolerance: float = Field(default=1e-6, gt=0, description="Seuil de violation des coupes")
    brute_force_max_m: int = Field(
        default=25,
        ge=0,
        description="Nombre maximal de produits accepté par l'énumération exhaustive",
    )
    normalize_rho: bool = False

    # Stockage fichiers
    instances_dir: Path = Field(default=Path("./instances"), description="Répertoire des instances")
    results_dir: Path = Field(default=Path("./results"), description="Répertoire des résultats")
    dump_dir: Path = Field(default=Path("./dumps"), description="Répertoire des exports LP")

    # Benchmark
    benchmark_workers: int = Field(default=2, ge=1, description="Résolutions concurrentes")

    # API
    api_prefix: str = "/api/v1"
    cors_origins: list[str] = Field(
        default=["*"],
        description="Origines CORS autorisées",
    )


@lru_cache()
def get_settings() -> Settings:
    """Obtenir les settings (cached)."""
    return Settings()
