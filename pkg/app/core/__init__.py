"""Module core avec exceptions, logging et dépendances."""

