"""Entité Instance : problème d'assortiment capacitaire sous MMNL."""

from typing import Any, Callable, TypeVar

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

T = TypeVar("T")


class LinearConstraint(BaseModel):
    """Contrainte de ressource Σ_j beta_j x_j ≤ alpha."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    beta: tuple[float, ...] = Field(..., description="Consommation de ressource par produit")
    alpha: float = Field(..., gt=0, description="Capacité disponible")

    @model_validator(mode="after")
    def check_coefficients(self) -> "LinearConstraint":
        """Les coefficients doivent être positifs ou nuls."""
        if any(b < 0 for b in self.beta):
            raise ValueError("les coefficients beta doivent être ≥ 0")
        return self

    @classmethod
    def cardinality(cls, m: int, capacity: float) -> "LinearConstraint":
        """Contrainte de cardinalité Σ_j x_j ≤ C."""
        return cls(beta=tuple([1.0] * m), alpha=capacity)

    def is_cardinality(self) -> bool:
        """Vérifier si la contrainte est une contrainte de cardinalité (beta constant)."""
        if not self.beta:
            return False
        first = self.beta[0]
        return first > 0 and all(b == first for b in self.beta)

    def capacity(self) -> int:
        """Nombre maximal de produits si la contrainte est de cardinalité."""
        return int(np.floor(self.alpha / self.beta[0] + 1e-9))


class Instance(BaseModel):
    """
    Instance MMNL complète.

    Les tableaux dérivés (r_i, r'_ij et les versions numpy) sont calculés une fois
    au chargement ; l'instance est immuable ensuite.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    n: int = Field(..., ge=1, description="Nombre de classes de clients")
    m: int = Field(..., ge=0, description="Nombre de produits")
    rho: tuple[float, ...] = Field(..., description="Poids des classes")
    v0: tuple[float, ...] = Field(..., description="Préférence de non-achat par classe")
    v: tuple[tuple[float, ...], ...] = Field(..., description="Préférences v_ij")
    r: tuple[tuple[float, ...], ...] = Field(..., description="Revenus r_ij")
    constraints: tuple[LinearConstraint, ...] = Field(default=(), description="Contraintes")

    _rho: np.ndarray = PrivateAttr()
    _v0: np.ndarray = PrivateAttr()
    _v: np.ndarray = PrivateAttr()
    _r: np.ndarray = PrivateAttr()
    _beta: np.ndarray = PrivateAttr()
    _alpha: np.ndarray = PrivateAttr()
    _memo: dict[str, Any] = PrivateAttr(default_factory=dict)

    @model_validator(mode="before")
    @classmethod
    def expand_cardinality(cls, data: Any) -> Any:
        """Développer le raccourci {"cardinality": C} en contrainte linéaire."""
        if not isinstance(data, dict) or "constraints" not in data:
            return data
        m = data.get("m")
        expanded = []
        for item in data["constraints"] or []:
            if isinstance(item, dict) and "cardinality" in item:
                if set(item) != {"cardinality"}:
                    raise ValueError("le raccourci cardinality n'accepte pas d'autre clé")
                if not isinstance(m, int):
                    raise ValueError("m doit être défini pour développer une cardinalité")
                expanded.append({"beta": [1.0] * m, "alpha": item["cardinality"]})
            else:
                expanded.append(item)
        return {**data, "constraints": expanded}

    @model_validator(mode="after")
    def check_dimensions(self) -> "Instance":
        """Vérifier les dimensions et les invariants du modèle."""
        n, m = self.n, self.m
        if len(self.rho) != n or len(self.v0) != n:
            raise ValueError(f"rho et v0 doivent avoir {n} entrées")
        if len(self.v) != n or any(len(row) != m for row in self.v):
            raise ValueError(f"v doit être une matrice {n}x{m}")
        if len(self.r) != n or any(len(row) != m for row in self.r):
            raise ValueError(f"r doit être une matrice {n}x{m}")
        for k, constraint in enumerate(self.constraints):
            if len(constraint.beta) != m:
                raise ValueError(f"la contrainte {k} doit avoir {m} coefficients")
        if any(p < 0 for p in self.rho) or sum(self.rho) <= 0:
            raise ValueError("rho doit être positif ou nul avec une somme strictement positive")
        if any(w <= 0 for w in self.v0):
            raise ValueError("chaque v0 doit être strictement positif")
        if any(x < 0 for row in self.v for x in row):
            raise ValueError("les préférences v doivent être ≥ 0")
        if any(x < 0 for row in self.r for x in row):
            raise ValueError("les revenus r doivent être ≥ 0")
        return self

    def model_post_init(self, __context: Any) -> None:
        """Pré-calculer les tableaux numpy utilisés par toutes les évaluations."""
        self._rho = np.asarray(self.rho, dtype=float)
        self._v0 = np.asarray(self.v0, dtype=float)
        self._v = np.asarray(self.v, dtype=float).reshape(self.n, self.m)
        self._r = np.asarray(self.r, dtype=float).reshape(self.n, self.m)
        if self.constraints:
            self._beta = np.asarray([c.beta for c in self.constraints], dtype=float)
            self._alpha = np.asarray([c.alpha for c in self.constraints], dtype=float)
        else:
            self._beta = np.zeros((0, self.m))
            self._alpha = np.zeros(0)
        for array in (self._rho, self._v0, self._v, self._r, self._beta, self._alpha):
            array.setflags(write=False)

    # Tableaux dérivés
    @property
    def rho_array(self) -> np.ndarray:
        return self._rho

    @property
    def v0_array(self) -> np.ndarray:
        return self._v0

    @property
    def v_matrix(self) -> np.ndarray:
        return self._v

    @property
    def r_matrix(self) -> np.ndarray:
        return self._r

    @property
    def beta_matrix(self) -> np.ndarray:
        return self._beta

    @property
    def alpha_vector(self) -> np.ndarray:
        return self._alpha

    @property
    def r_max_class(self) -> np.ndarray:
        """r_i = max_j r_ij (0 si aucun produit)."""
        return self.memo("r_max_class", self._compute_r_max)

    @property
    def r_shift(self) -> np.ndarray:
        """r'_ij = r_i - r_ij, toujours ≥ 0."""
        return self.memo("r_shift", lambda: self.r_max_class[:, None] - self._r)

    @property
    def constant_revenue(self) -> float:
        """Σ_i rho_i r_i, tel que F(x) = Σ_i rho_i r_i - G(x)."""
        return self.memo("constant_revenue", lambda: float(self._rho @ self.r_max_class))

    def _compute_r_max(self) -> np.ndarray:
        if self.m == 0:
            return np.zeros(self.n)
        return self._r.max(axis=1)

    def memo(self, key: str, factory: Callable[[], T]) -> T:
        """Cache par instance (l'instance est immuable, le cache n'est jamais invalidé)."""
        if key not in self._memo:
            value = factory()
            if isinstance(value, np.ndarray):
                value.setflags(write=False)
            self._memo[key] = value
        return self._memo[key]

    def cardinality_only(self) -> int | None:
        """Capacité C si l'unique contrainte est de cardinalité, sinon None."""
        if len(self.constraints) == 1 and self.constraints[0].is_cardinality():
            return self.constraints[0].capacity()
        return None

    def is_unconstrained(self) -> bool:
        """Vérifier l'absence de contrainte."""
        return not self.constraints

    def normalized(self) -> "Instance":
        """Copie de l'instance avec rho renormalisé pour sommer à 1."""
        total = sum(self.rho)
        return Instance(
            n=self.n,
            m=self.m,
            rho=tuple(p / total for p in self.rho),
            v0=self.v0,
            v=self.v,
            r=self.r,
            constraints=self.constraints,
        )

    def to_document(self) -> dict[str, Any]:
        """Représentation JSON canonique (format de fichier d'instance)."""
        return {
            "n": self.n,
            "m": self.m,
            "rho": list(self.rho),
            "v0": list(self.v0),
            "v": [list(row) for row in self.v],
            "r": [list(row) for row in self.r],
            "constraints": [
                {"beta": list(c.beta), "alpha": c.alpha} for c in self.constraints
            ],
        }

    @classmethod
    def from_arrays(
        cls,
        rho: Any,
        v0: Any,
        v: Any,
        r: Any,
        constraints: list[LinearConstraint] | None = None,
    ) -> "Instance":
        """Construire une instance depuis des tableaux numpy."""
        v_arr = np.atleast_2d(np.asarray(v, dtype=float))
        r_arr = np.atleast_2d(np.asarray(r, dtype=float))
        n, m = v_arr.shape
        return cls(
            n=n,
            m=m,
            rho=tuple(float(p) for p in np.asarray(rho, dtype=float)),
            v0=tuple(float(w) for w in np.asarray(v0, dtype=float)),
            v=tuple(tuple(float(x) for x in row) for row in v_arr),
            r=tuple(tuple(float(x) for x in row) for row in r_arr),
            constraints=tuple(constraints or ()),
        )
