"""Tests end-to-end."""

