"""Optimisation d'assortiment sous logit multinomial mixte."""

__version__ = "1.0.0"

