"""Schemas Pydantic pour l'API."""

