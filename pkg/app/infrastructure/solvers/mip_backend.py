"""Backend python-mip (CBC) : MILP, contraintes paresseuses et solution de départ."""

import math
from typing import Any, Optional

from app.core.exceptions import BackendUnavailableError, MasterSolveError
from app.core.logging import get_logger
from app.infrastructure.solvers.base import (
    BackendCapabilities,
    BackendModel,
    BackendSolution,
    LinearRow,
    MasterStatus,
    Sense,
    Separator,
    SolveLimits,
    SolverBackend,
)

try:
    import mip

    MIP_AVAILABLE = True
except ImportError:  # pragma: no cover - dépend de l'environnement
    mip = None  # type: ignore[assignment]
    MIP_AVAILABLE = False

logger = get_logger(__name__)

MIP_CAPABILITIES = BackendCapabilities(
    milp=True,
    bilinear_objective=False,
    bilinear_constraints=False,
    lazy_constraints=True,
    warm_start=True,
)


def _linear_expr(variables: dict[str, Any], terms: dict[str, float]) -> Any:
    return mip.xsum(coef * variables[name] for name, coef in terms.items() if coef != 0.0)


def _constraint(expr: Any, sense: Sense, rhs: float) -> Any:
    if sense is Sense.LE:
        return expr <= rhs
    if sense is Sense.GE:
        return expr >= rhs
    return expr == rhs


def translatable_rows(rows: list[LinearRow], local: dict[str, Any], call: int = 0) -> list[LinearRow]:
    """Lignes dont toutes les variables existent dans le modèle local ; les autres sont journalisées."""
    kept: list[LinearRow] = []
    for row in rows:
        missing = sorted(name for name in row.terms if name not in local)
        if missing:
            logger.debug("Ligne paresseuse ignorée", call=call, row=row.name, missing=missing)
            continue
        kept.append(row)
    return kept


if MIP_AVAILABLE:

    class _LazyRowGenerator(mip.ConstrsGenerator):
        """Générateur CBC : traduit le candidat en valeurs nommées et ajoute les lignes violées."""

        def __init__(self, names: list[str], variables: list[Any], separator: Separator) -> None:
            self.names = names
            self.variables = variables
            self.separator = separator
            self.calls = 0

        def generate_constrs(self, model: Any, depth: int = 0, npass: int = 0) -> None:
            self.calls += 1
            translated = model.translate(self.variables)
            values: dict[str, float] = {}
            local: dict[str, Any] = {}
            for name, var in zip(self.names, translated):
                if var is None or var.x is None:
                    continue
                values[name] = float(var.x)
                local[name] = var
            rows = self.separator(values)
            logger.debug("Séparation paresseuse", call=self.calls, depth=depth, rows=len(rows))
            for row in translatable_rows(rows, local, self.calls):
                model += _constraint(_linear_expr(local, row.terms), row.sense, row.rhs)


class MipModel(BackendModel):
    """Session python-mip sur CBC."""

    def __init__(self, name: str, logger: Any) -> None:
        """Initialiser le modèle CBC."""
        super().__init__(name, MIP_CAPABILITIES, logger)
        self.model = mip.Model(name=name, sense=mip.MINIMIZE, solver_name=mip.CBC)
        self.model.verbose = 0
        self.variables: dict[str, Any] = {}

    def add_variable(self, name: str, lb: float = 0.0, ub: float = float("inf"), binary: bool = False) -> None:
        var_type = mip.BINARY if binary else mip.CONTINUOUS
        upper = mip.INF if math.isinf(ub) else ub
        self.variables[name] = self.model.add_var(name=name, lb=lb, ub=upper, var_type=var_type)

    def add_row(self, row: LinearRow) -> None:
        terms = {k: c for k, c in row.terms.items() if c != 0.0}
        if not terms:
            return
        self.model.add_constr(
            _constraint(_linear_expr(self.variables, terms), row.sense, row.rhs), name=row.name or ""
        )

    def set_objective(
        self,
        linear: dict[str, float],
        products: Optional[list[tuple[str, str, float]]] = None,
        constant: float = 0.0,
    ) -> None:
        self._require_bilinear(products)
        self.model.objective = mip.minimize(_linear_expr(self.variables, linear) + constant)

    def set_start(self, values: dict[str, float]) -> None:
        self.model.start = [(self.variables[name], value) for name, value in values.items()]

    def solve(self, limits: SolveLimits, separator: Optional[Separator] = None) -> BackendSolution:
        self._require_lazy(separator)
        self.model.threads = limits.threads
        self.model.max_mip_gap = max(limits.gap, 1e-9)
        self.model.max_mip_gap_abs = 1e-10

        generator = None
        if separator is not None:
            names = list(self.variables)
            generator = _LazyRowGenerator(names, [self.variables[n] for n in names], separator)
            self.model.lazy_constrs_generator = generator

        try:
            if limits.time_limit is not None:
                status = self.model.optimize(max_seconds=limits.time_limit, relax=limits.relax)
            else:
                status = self.model.optimize(relax=limits.relax)
        except Exception as e:
            raise MasterSolveError(f"Échec de CBC: {str(e)}", {"model": self.name}) from e

        mapped = self._map_status(status)
        solution = BackendSolution(status=mapped, message=status.name)
        if mapped in (MasterStatus.OPTIMAL, MasterStatus.FEASIBLE_LIMIT) and self.model.num_solutions:
            solution.values = {
                name: float(var.x) for name, var in self.variables.items() if var.x is not None
            }
            solution.objective = float(self.model.objective_value)
            solution.bound = float(self.model.objective_bound)
        elif mapped is MasterStatus.FEASIBLE_LIMIT:
            solution.bound = float(self.model.objective_bound)

        self.logger.debug(
            "Résolution CBC terminée",
            model=self.name,
            status=mapped.value,
            objective=solution.objective,
            lazy_calls=generator.calls if generator else 0,
        )
        return solution

    @staticmethod
    def _map_status(status: Any) -> MasterStatus:
        if status == mip.OptimizationStatus.OPTIMAL:
            return MasterStatus.OPTIMAL
        if status in (mip.OptimizationStatus.FEASIBLE, mip.OptimizationStatus.NO_SOLUTION_FOUND):
            return MasterStatus.FEASIBLE_LIMIT
        if status in (mip.OptimizationStatus.INFEASIBLE, mip.OptimizationStatus.INT_INFEASIBLE):
            return MasterStatus.INFEASIBLE
        return MasterStatus.ERROR

    def write(self, path: str) -> None:
        self.model.write(path)

    def variable_names(self) -> list[str]:
        return list(self.variables)

    def row_count(self) -> int:
        return int(self.model.num_rows)


class MipBackend(SolverBackend):
    """Backend de référence, open source, basé sur python-mip et CBC."""

    name = "cbc"
    capabilities = MIP_CAPABILITIES

    def __init__(self) -> None:
        """Initialiser le backend."""
        super().__init__(logger)
        if not MIP_AVAILABLE:
            raise BackendUnavailableError("python-mip n'est pas installé", {"backend": self.name})

    @classmethod
    def is_available(cls) -> bool:
        return MIP_AVAILABLE

    def create_model(self, name: str) -> MipModel:
        return MipModel(name, self.logger)
