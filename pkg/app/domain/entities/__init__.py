"""Entités du domain."""

