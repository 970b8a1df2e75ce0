"""Factory pour créer le backend de résolution demandé."""

from typing import Optional

from app.config import get_settings
from app.core.exceptions import BackendUnavailableError
from app.core.logging import get_logger
from app.infrastructure.solvers.base import SolverBackend
from app.infrastructure.solvers.gurobi_backend import GurobiBackend
from app.infrastructure.solvers.mip_backend import MipBackend

logger = get_logger(__name__)


class BackendFactory:
    """Factory pour créer des backends par nom."""

    def __init__(self) -> None:
        """Initialiser la factory."""
        self._backends: dict[str, type[SolverBackend]] = {}
        self._logger = logger

    def register(self, backend: type[SolverBackend]) -> None:
        """Enregistrer une classe de backend."""
        self._backends[backend.name] = backend
        self._logger.debug(f"Backend enregistré: {backend.name}")

    def names(self) -> list[str]:
        """Noms enregistrés."""
        return list(self._backends)

    def available(self) -> list[str]:
        """Noms des backends dont la bibliothèque est importable."""
        return [name for name, cls in self._backends.items() if cls.is_available()]

    def create(self, name: Optional[str] = None) -> SolverBackend:
        """
        Créer un backend.

        Args:
            name: Nom du backend (Settings.solver_backend par défaut)

        Returns:
            Instance du backend

        Raises:
            BackendUnavailableError: Si le nom est inconnu ou la bibliothèque absente
        """
        name = (name or get_settings().solver_backend).lower()
        backend = self._backends.get(name)
        if backend is None:
            raise BackendUnavailableError(
                f"Backend inconnu: {name}", {"known": self.names()}
            )
        if not backend.is_available():
            raise BackendUnavailableError(
                f"Backend non installé: {name}", {"available": self.available()}
            )
        self._logger.info(f"Backend sélectionné: {name}")
        return backend()


def default_factory() -> BackendFactory:
    """Factory avec les backends connus."""
    factory = BackendFactory()
    factory.register(MipBackend)
    factory.register(GurobiBackend)
    return factory


def create_backend(name: Optional[str] = None) -> SolverBackend:
    """Raccourci : créer un backend depuis la factory par défaut."""
    return default_factory().create(name)
