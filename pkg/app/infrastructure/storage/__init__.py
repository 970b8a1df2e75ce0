"""Stockage de fichiers."""

