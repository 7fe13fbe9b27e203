"""Metaheuristic tuning laboratory on discrete surrogate problems."""

__version__ = "0.1.0"
