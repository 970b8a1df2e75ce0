"""Tâches asynchrones."""

