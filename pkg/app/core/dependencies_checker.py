"""Vérification des backends de résolution disponibles au démarrage."""

import importlib

from pydantic import BaseModel

from app.config import get_settings
from app.core.logging import get_logger

logger = get_logger(__name__)

# (module importé, paquet pip, obligatoire)
BACKEND_PACKAGES = (
    ("mip", "mip", True),
    ("gurobipy", "gurobipy", False),
)
NUMERIC_PACKAGES = ("numpy", "scipy", "pandas", "networkx")


class BackendReport(BaseModel):
    """État des bibliothèques de résolution."""

    available: list[str]
    missing: list[str]
    default_backend: str
    default_ok: bool


class BackendChecker:
    """Vérificateur des bibliothèques numériques et des backends MILP."""

    def __init__(self) -> None:
        """Initialiser le vérificateur."""
        self.logger = logger

    @staticmethod
    def _importable(module: str) -> bool:
        try:
            importlib.import_module(module)
            return True
        except ImportError:
            return False
        except Exception as e:
            # gurobipy peut échouer à l'import sans licence
            logger.debug(f"Import impossible de {module}: {e}")
            return False

    def report(self) -> BackendReport:
        """
        Inventorier les paquets.

        Returns:
            Rapport ; default_ok indique si Settings.solver_backend est utilisable
        """
        from app.infrastructure.solvers.factory import default_factory

        missing = [name for name in NUMERIC_PACKAGES if not self._importable(name)]
        for module, package, required in BACKEND_PACKAGES:
            if not self._importable(module) and required:
                missing.append(package)

        factory = default_factory()
        available = factory.available()
        default = get_settings().solver_backend.lower()
        return BackendReport(
            available=available,
            missing=missing,
            default_backend=default,
            default_ok=default in available,
        )

    def check(self) -> bool:
        """Journaliser le rapport et indiquer si le backend par défaut est utilisable."""
        self.logger.info("Vérification des backends...")
        report = self.report()
        if report.missing:
            self.logger.warning(f"Packages manquants: {', '.join(report.missing)}")
        if not report.default_ok:
            self.logger.warning(
                f"Backend par défaut indisponible: {report.default_backend}",
                available=report.available,
            )
        self.logger.info("Backends disponibles", available=report.available)
        return report.default_ok and not report.missing


async def check_backends_on_startup() -> bool:
    """Vérifier les backends au démarrage de l'API."""
    return BackendChecker().check()
