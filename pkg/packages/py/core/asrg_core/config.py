"""Configuration settings."""

from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

# Find .env in the workspace root (five levels up from this file)
PROJECT_ROOT = Path(__file__).parent.parent.parent.parent.parent
ENV_FILE = PROJECT_ROOT / ".env"


class Settings(BaseSettings):
    """Toolkit settings from environment (``ASRG_`` prefix)."""

    model_config = SettingsConfigDict(
        env_prefix="ASRG_",
        env_file=str(ENV_FILE) if ENV_FILE.exists() else ".env",
        extra="ignore",
    )

    # Logging
    log_level: str = "INFO"

    # Size limits
    max_field_order: int = 2**16
    max_pg_points: int = 10_000_000
    max_spectral_order: int = 3000
    max_construction_order: int = 100_000
    max_no_graph_order: int = 3000
    max_clique_order: int = 5000

    # Search budgets
    clique_node_budget: int = 100_000_000

    # Eigensolver
    jacobi_tolerance: float = 1e-12
    jacobi_max_sweeps: int = 100
    symmetry_tolerance: float = 1e-12
    cluster_tolerance: float = 1e-6

    # Checks
    bound_tolerance: float = 1e-9
    trace_tolerance: float = 1e-6

    # CLI
    workers: int = 4
