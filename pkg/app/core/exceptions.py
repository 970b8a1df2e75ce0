"""Exceptions custom hiérarchisées pour l'application."""

from typing import Any, Optional


class ModelError(Exception):
    """Exception de base pour les erreurs d'entrée (instance, configuration)."""

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InstanceError(ModelError):
    """Erreur levée quand une instance est mal formée ou incohérente."""

    pass


class ConfigurationError(ModelError):
    """Erreur levée quand une configuration de résolution est invalide."""

    pass


class ConditionallyInfeasibleError(ModelError):
    """Erreur levée quand fixer x_j = b rend l'ensemble réalisable vide."""

    code = "conditionally-infeasible"

    def __init__(self, message: str, product: int, value: int) -> None:
        super().__init__(message, {"product": product, "value": value})
        self.product = product
        self.value = value


class OracleLimitError(ModelError):
    """Erreur levée quand l'énumération exhaustive dépasse la taille autorisée."""

    pass


class SolverError(Exception):
    """Exception de base pour les erreurs de backend de résolution."""

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}


class BackendUnavailableError(SolverError):
    """Erreur levée quand le backend demandé n'est pas installé ou inconnu."""

    pass


class UnsupportedCapabilityError(SolverError):
    """Erreur levée quand le backend ne fournit pas une capacité requise."""

    code = "unsupported"


class BilinearUnsupportedError(UnsupportedCapabilityError):
    """Le backend ne sait pas traiter les termes bilinéaires."""

    code = "bilinear-unsupported"


class LazyUnsupportedError(UnsupportedCapabilityError):
    """Le backend ne propose pas de callback de contraintes paresseuses."""

    code = "lazy-unsupported"


class MasterSolveError(SolverError):
    """Erreur levée quand la résolution du problème maître échoue."""

    pass


class StorageError(Exception):
    """Exception de base pour les erreurs de stockage."""

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}
