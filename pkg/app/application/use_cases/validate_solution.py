"""Use case pour vérifier une solution annoncée contre une instance."""

from typing import Optional, Sequence

from pydantic import BaseModel, Field

from app.core.logging import get_logger
from app.domain.entities.instance import Instance
from app.domain.services.choice_model import as_vector, eval_min_objective, eval_revenue, is_feasible

logger = get_logger(__name__)

OBJECTIVE_TOL = 1e-6


class ValidationVerdict(BaseModel):
    """Verdict de validation."""

    valid: bool
    feasible: bool
    binary: bool
    objective: Optional[float] = Field(None, description="F recalculé")
    g_value: Optional[float] = Field(None, description="G recalculé")
    claimed_objective: Optional[float] = None
    mismatch: Optional[float] = Field(None, description="|F annoncé − F recalculé|")
    messages: list[str] = Field(default_factory=list)


class ValidateSolutionUseCase:
    """Recalculer F, G et la faisabilité d'un assortiment annoncé."""

    def __init__(self, tolerance: float = OBJECTIVE_TOL) -> None:
        """Initialiser le use case."""
        self.tolerance = tolerance

    def execute(
        self,
        inst: Instance,
        x: Sequence[float],
        claimed_objective: Optional[float] = None,
    ) -> ValidationVerdict:
        """
        Valider une solution.

        Args:
            inst: Instance
            x: Assortiment annoncé (vecteur binaire)
            claimed_objective: Valeur de F annoncée, si fournie

        Returns:
            Verdict ; valid est faux si x est non binaire, infaisable ou si F diffère
        """
        vector = as_vector(inst, x)
        messages: list[str] = []
        binary = bool(((vector == 0) | (vector == 1)).all())
        if not binary:
            messages.append("x contient des valeurs non binaires")
        feasible = is_feasible(inst, vector)
        if not feasible:
            messages.append("x viole au moins une contrainte de capacité")

        objective = eval_revenue(inst, vector)
        verdict = ValidationVerdict(
            valid=binary and feasible,
            feasible=feasible,
            binary=binary,
            objective=objective,
            g_value=eval_min_objective(inst, vector),
            claimed_objective=claimed_objective,
        )
        if claimed_objective is not None:
            verdict.mismatch = abs(claimed_objective - objective)
            if verdict.mismatch > self.tolerance * max(1.0, abs(objective)):
                verdict.valid = False
                verdict.messages.append(
                    f"objectif annoncé {claimed_objective:.9g} différent du recalcul {objective:.9g}"
                )
        verdict.messages = messages + verdict.messages
        logger.info("Validation terminée", valid=verdict.valid, feasible=feasible, objective=objective)
        return verdict
