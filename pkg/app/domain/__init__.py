"""Domain layer - Entités métier et value objects."""

