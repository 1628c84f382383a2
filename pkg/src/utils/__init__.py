"""
Utility helpers for the Ant System solver.
"""
from src.utils.timing import PhaseTimer

__all__ = ['PhaseTimer']
