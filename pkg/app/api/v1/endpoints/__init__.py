"""Endpoints de l'API v1."""

