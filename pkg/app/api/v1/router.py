"""Router principal de l'API v1."""

from fastapi import APIRouter

from app.api.v1.endpoints import families, solve

api_router = APIRouter()

api_router.include_router(solve.router, tags=["solve"])
api_router.include_router(families.router, prefix="/families", tags=["families"])
