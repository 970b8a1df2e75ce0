"""Tests unitaires."""

