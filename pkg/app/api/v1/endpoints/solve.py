"""Endpoints de résolution et de validation."""

import asyncio
from typing import Annotated

from fastapi import APIRouter, Depends

from app.api.schemas.solve import SolveRequest, ValidateRequest
from app.application.use_cases.solve_instance import SolveInstanceUseCase
from app.application.use_cases.validate_solution import ValidateSolutionUseCase, ValidationVerdict
from app.core.dependencies import get_solve_use_case, get_validate_use_case
from app.core.logging import get_logger
from app.domain.value_objects.exact_result import ExactResult

router = APIRouter()
logger = get_logger(__name__)


@router.post("/solve", response_model=ExactResult)
async def solve(
    request: SolveRequest,
    use_case: Annotated[SolveInstanceUseCase, Depends(get_solve_use_case)],
) -> ExactResult:
    """Résoudre une instance avec la configuration demandée."""
    inst = request.instance.normalized() if request.normalize_rho else request.instance
    loop = asyncio.get_running_loop()
    return await loop.run_in_executor(None, use_case.execute, inst, request.config)


@router.post("/validate", response_model=ValidationVerdict)
async def validate(
    request: ValidateRequest,
    use_case: Annotated[ValidateSolutionUseCase, Depends(get_validate_use_case)],
) -> ValidationVerdict:
    """Recalculer F et la faisabilité d'un assortiment annoncé."""
    return use_case.execute(request.instance, request.x, request.objective)
