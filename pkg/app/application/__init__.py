"""Application layer - Use cases et pipelines."""

