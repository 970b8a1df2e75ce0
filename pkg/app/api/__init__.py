"""API layer - Endpoints FastAPI."""

