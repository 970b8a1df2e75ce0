"""Endpoints pour les familles d'instances."""

from fastapi import APIRouter

from app.api.schemas.family import GenerateRequest, GenerateResponse
from app.core.logging import get_logger
from app.domain.value_objects.benchmark import FamilySpec
from app.infrastructure.generators.families import FAMILIES, get_family
from app.infrastructure.generators.instance_generator import generate, with_size

router = APIRouter()
logger = get_logger(__name__)


@router.get("/", response_model=list[FamilySpec])
async def list_families() -> list[FamilySpec]:
    """Lister les familles enregistrées."""
    return list(FAMILIES.values())


@router.post("/{name}/generate", response_model=GenerateResponse)
async def generate_instance(name: str, request: GenerateRequest) -> GenerateResponse:
    """Générer une instance d'une famille (tailles réduites possibles)."""
    spec = with_size(
        get_family(name),
        m=request.m,
        n=request.n,
        capacities=tuple(request.capacities) if request.capacities else None,
    )
    item = generate(spec, request.seed, v0=request.v0, alpha=request.alpha, k=request.k)
    logger.info("Instance générée", family=name, instance_id=item.instance_id)
    return GenerateResponse(
        instance_id=item.instance_id,
        family=item.family,
        v0=item.v0,
        alpha=item.alpha,
        k=item.k,
        instance=item.instance.to_document(),
    )
