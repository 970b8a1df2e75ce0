"""Tests du projet."""

