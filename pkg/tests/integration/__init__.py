"""Tests d'intégration."""

