"""Pipelines de traitement."""

