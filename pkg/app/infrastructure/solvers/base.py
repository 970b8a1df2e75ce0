"""Interface abstraite pour les backends de résolution MILP."""

from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Callable, Optional

from pydantic import BaseModel, ConfigDict, Field

from app.core.exceptions import BilinearUnsupportedError, LazyUnsupportedError


class Sense(str, Enum):
    """Sens d'une contrainte."""

    LE = "<="
    GE = ">="
    EQ = "=="


class MasterStatus(str, Enum):
    """Statut renvoyé par un backend après résolution."""

    OPTIMAL = "optimal"
    FEASIBLE_LIMIT = "feasible-limit"
    INFEASIBLE = "infeasible"
    ERROR = "error"


class BackendCapabilities(BaseModel):
    """Capacités déclarées par un backend."""

    model_config = ConfigDict(frozen=True)

    milp: bool = True
    bilinear_objective: bool = False
    bilinear_constraints: bool = False
    lazy_constraints: bool = False
    warm_start: bool = False


class SolveLimits(BaseModel):
    """Limites passées au backend."""

    model_config = ConfigDict(frozen=True)

    time_limit: Optional[float] = Field(None, gt=0, description="Secondes")
    gap: float = Field(default=1e-9, ge=0, description="Écart relatif d'arrêt")
    threads: int = Field(default=1, ge=0)
    relax: bool = Field(default=False, description="Résoudre la relaxation continue")


class LinearRow(BaseModel):
    """Contrainte Σ coef·var (sense) rhs, variables désignées par leur nom."""

    model_config = ConfigDict(frozen=True)

    terms: dict[str, float]
    sense: Sense
    rhs: float
    name: Optional[str] = None


class BackendSolution(BaseModel):
    """Solution renvoyée par un backend."""

    status: MasterStatus
    values: dict[str, float] = Field(default_factory=dict)
    objective: Optional[float] = None
    bound: Optional[float] = None
    nodes: Optional[int] = None
    message: Optional[str] = None

    def has_incumbent(self) -> bool:
        return self.objective is not None and bool(self.values)


# Séparateur appelé sur chaque candidat entier : renvoie les lignes à ajouter
Separator = Callable[[dict[str, float]], list[LinearRow]]


class BackendModel(ABC):
    """Session de modélisation isolée : un problème, un backend."""

    def __init__(self, name: str, capabilities: BackendCapabilities, logger: Any) -> None:
        """Initialiser la session."""
        self.name = name
        self.capabilities = capabilities
        self.logger = logger

    @abstractmethod
    def add_variable(self, name: str, lb: float = 0.0, ub: float = float("inf"), binary: bool = False) -> None:
        """Ajouter une variable nommée (noms uniques dans le modèle)."""
        pass

    @abstractmethod
    def add_row(self, row: LinearRow) -> None:
        """Ajouter une contrainte linéaire."""
        pass

    def add_bilinear_row(
        self,
        terms: dict[str, float],
        products: list[tuple[str, str, float]],
        sense: Sense,
        rhs: float,
        name: Optional[str] = None,
    ) -> None:
        """
        Ajouter une contrainte avec termes produits coef·u·w.

        Raises:
            BilinearUnsupportedError: Si le backend ne gère pas les contraintes bilinéaires
        """
        raise BilinearUnsupportedError(
            f"Contraintes bilinéaires non supportées par {self.__class__.__name__}"
        )

    @abstractmethod
    def set_objective(
        self,
        linear: dict[str, float],
        products: Optional[list[tuple[str, str, float]]] = None,
        constant: float = 0.0,
    ) -> None:
        """
        Définir l'objectif de minimisation.

        Raises:
            BilinearUnsupportedError: Si products est non vide sans la capacité
        """
        pass

    def set_start(self, values: dict[str, float]) -> None:
        """Fournir une solution de départ (ignorée sans la capacité warm_start)."""
        self.logger.debug("Solution de départ ignorée", backend=self.__class__.__name__)

    @abstractmethod
    def solve(self, limits: SolveLimits, separator: Optional[Separator] = None) -> BackendSolution:
        """
        Résoudre le modèle.

        Args:
            limits: Limites de temps, d'écart et de threads
            separator: Séparateur de contraintes paresseuses appelé aux candidats entiers

        Raises:
            LazyUnsupportedError: Si un séparateur est fourni sans la capacité
        """
        pass

    @abstractmethod
    def write(self, path: str) -> None:
        """Écrire le modèle au format LP."""
        pass

    @abstractmethod
    def variable_names(self) -> list[str]:
        """Noms des variables du modèle."""
        pass

    @abstractmethod
    def row_count(self) -> int:
        """Nombre de contraintes du modèle."""
        pass

    def _require_bilinear(self, products: Optional[list[tuple[str, str, float]]]) -> None:
        if products and not self.capabilities.bilinear_objective:
            raise BilinearUnsupportedError(
                f"Objectif bilinéaire non supporté par {self.__class__.__name__}"
            )

    def _require_lazy(self, separator: Optional[Separator]) -> None:
        if separator is not None and not self.capabilities.lazy_constraints:
            raise LazyUnsupportedError(
                f"Contraintes paresseuses non supportées par {self.__class__.__name__}"
            )


class SolverBackend(ABC):
    """Classe de base abstraite pour tous les backends."""

    name: str = ""
    capabilities: BackendCapabilities = BackendCapabilities()

    def __init__(self, logger: Any) -> None:
        """Initialiser le backend."""
        self.logger = logger

    @classmethod
    @abstractmethod
    def is_available(cls) -> bool:
        """Vérifier que la bibliothèque du backend est importable."""
        pass

    @abstractmethod
    def create_model(self, name: str) -> BackendModel:
        """Créer une session de modélisation isolée."""
        pass
