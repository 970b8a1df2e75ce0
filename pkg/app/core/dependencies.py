"""Dépendances FastAPI réutilisables."""

from typing import Annotated

from fastapi import Depends

from app.application.use_cases.solve_instance import SolveInstanceUseCase
from app.application.use_cases.validate_solution import ValidateSolutionUseCase
from app.config import Settings, get_settings


def get_solve_use_case(settings: Annotated[Settings, Depends(get_settings)]) -> SolveInstanceUseCase:
    """Use case de résolution, une session de backend par requête."""
    return SolveInstanceUseCase(backend_name=settings.solver_backend)


def get_validate_use_case() -> ValidateSolutionUseCase:
    return ValidateSolutionUseCase()
