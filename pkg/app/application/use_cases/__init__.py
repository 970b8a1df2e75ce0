"""Use cases de l'application."""

