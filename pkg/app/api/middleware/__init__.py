"""Middleware FastAPI."""

