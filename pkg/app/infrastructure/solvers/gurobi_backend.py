"""Backend gurobipy (optionnel) : termes bilinéaires, callback MIPSOL et solution de départ."""

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
    import gurobipy as gp
    from gurobipy import GRB

    GUROBI_AVAILABLE = True
except ImportError:  # pragma: no cover - dépend de l'environnement
    gp = None  # type: ignore[assignment]
    GRB = None  # type: ignore[assignment]
    GUROBI_AVAILABLE = False

logger = get_logger(__name__)

GUROBI_CAPABILITIES = BackendCapabilities(
    milp=True,
    bilinear_objective=True,
    bilinear_constraints=True,
    lazy_constraints=True,
    warm_start=True,
)


def _add_sense(model: Any, expr: Any, sense: Sense, rhs: float, name: str = "") -> None:
    if sense is Sense.LE:
        model.addConstr(expr <= rhs, name=name)
    elif sense is Sense.GE:
        model.addConstr(expr >= rhs, name=name)
    else:
        model.addConstr(expr == rhs, name=name)


def _lazy_sense(model: Any, expr: Any, sense: Sense, rhs: float) -> None:
    if sense is Sense.LE:
        model.cbLazy(expr <= rhs)
    elif sense is Sense.GE:
        model.cbLazy(expr >= rhs)
    else:
        model.cbLazy(expr == rhs)


class GurobiModel(BackendModel):
    """Session gurobipy."""

    def __init__(self, name: str, logger: Any) -> None:
        """Initialiser le modèle Gurobi."""
        super().__init__(name, GUROBI_CAPABILITIES, logger)
        self.model = gp.Model(name)
        self.model.Params.OutputFlag = 0
        self.model.Params.NonConvex = 2
        self.variables: dict[str, Any] = {}

    def _linear(self, terms: dict[str, float]) -> Any:
        return gp.LinExpr(
            [coef for coef in terms.values()], [self.variables[name] for name in terms]
        )

    def _quadratic(self, terms: dict[str, float], products: list[tuple[str, str, float]], constant: float = 0.0) -> Any:
        expr = gp.QuadExpr(self._linear(terms))
        for left, right, coef in products:
            expr.add(self.variables[left] * self.variables[right], coef)
        expr.addConstant(constant)
        return expr

    def add_variable(self, name: str, lb: float = 0.0, ub: float = float("inf"), binary: bool = False) -> None:
        vtype = GRB.BINARY if binary else GRB.CONTINUOUS
        upper = GRB.INFINITY if math.isinf(ub) else ub
        self.variables[name] = self.model.addVar(lb=lb, ub=upper, vtype=vtype, name=name)

    def add_row(self, row: LinearRow) -> None:
        _add_sense(self.model, self._linear(row.terms), row.sense, row.rhs, row.name or "")

    def add_bilinear_row(
        self,
        terms: dict[str, float],
        products: list[tuple[str, str, float]],
        sense: Sense,
        rhs: float,
        name: Optional[str] = None,
    ) -> None:
        _add_sense(self.model, self._quadratic(terms, products), sense, rhs, name or "")

    def set_objective(
        self,
        linear: dict[str, float],
        products: Optional[list[tuple[str, str, float]]] = None,
        constant: float = 0.0,
    ) -> None:
        self._require_bilinear(products)
        self.model.setObjective(self._quadratic(linear, products or [], constant), GRB.MINIMIZE)

    def set_start(self, values: dict[str, float]) -> None:
        self.model.update()
        for name, value in values.items():
            self.variables[name].Start = value

    def solve(self, limits: SolveLimits, separator: Optional[Separator] = None) -> BackendSolution:
        self._require_lazy(separator)
        model = self.model.relax() if limits.relax else self.model
        model.Params.OutputFlag = 0
        model.Params.Threads = limits.threads
        model.Params.MIPGap = limits.gap
        if limits.time_limit is not None:
            model.Params.TimeLimit = limits.time_limit

        names = list(self.variables)
        try:
            if separator is not None and not limits.relax:
                model.Params.LazyConstraints = 1
                ordered = [self.variables[n] for n in names]

                def callback(cb_model: Any, where: int) -> None:
                    if where != GRB.Callback.MIPSOL:
                        return
                    values = dict(zip(names, cb_model.cbGetSolution(ordered)))
                    for row in separator(values):
                        _lazy_sense(cb_model, self._linear(row.terms), row.sense, row.rhs)

                model.optimize(callback)
            else:
                model.optimize()
        except gp.GurobiError as e:
            raise MasterSolveError(f"Échec de Gurobi: {str(e)}", {"model": self.name}) from e

        mapped = self._map_status(model.Status)
        solution = BackendSolution(status=mapped, message=str(model.Status))
        if mapped in (MasterStatus.OPTIMAL, MasterStatus.FEASIBLE_LIMIT) and model.SolCount > 0:
            relaxed_vars = model.getVars() if limits.relax else [self.variables[n] for n in names]
            solution.values = {name: float(var.X) for name, var in zip(names, relaxed_vars)}
            solution.objective = float(model.ObjVal)
            solution.bound = float(model.ObjVal if limits.relax else model.ObjBound)
            if not limits.relax:
                solution.nodes = int(model.NodeCount)
        return solution

    @staticmethod
    def _map_status(status: int) -> MasterStatus:
        if status == GRB.OPTIMAL:
            return MasterStatus.OPTIMAL
        if status in (GRB.TIME_LIMIT, GRB.SUBOPTIMAL, GRB.INTERRUPTED, GRB.NODE_LIMIT):
            return MasterStatus.FEASIBLE_LIMIT
        if status in (GRB.INFEASIBLE, GRB.INF_OR_UNBD):
            return MasterStatus.INFEASIBLE
        return MasterStatus.ERROR

    def write(self, path: str) -> None:
        self.model.update()
        self.model.write(path)

    def variable_names(self) -> list[str]:
        return list(self.variables)

    def row_count(self) -> int:
        self.model.update()
        return int(self.model.NumConstrs + self.model.NumQConstrs)


class GurobiBackend(SolverBackend):
    """Backend commercial optionnel ; seul backend à gérer les maîtres bilinéaires."""

    name = "gurobi"
    capabilities = GUROBI_CAPABILITIES

    def __init__(self) -> None:
        """Initialiser le backend."""
        super().__init__(logger)
        if not GUROBI_AVAILABLE:
            raise BackendUnavailableError("gurobipy n'est pas installé", {"backend": self.name})

    @classmethod
    def is_available(cls) -> bool:
        return GUROBI_AVAILABLE

    def create_model(self, name: str) -> GurobiModel:
        return GurobiModel(name, self.logger)
