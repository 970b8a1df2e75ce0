"""Infrastructure layer - Extracteurs, processeurs, structurateurs."""

