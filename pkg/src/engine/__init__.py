"""
Ant System engine: configuration, worker pool and the iteration loop.
"""
from src.engine.colony import AntSystem, Phase, check_ledger, make_run_config, run, run_problem
from src.engine.worker_pool import ForkJoinPool, fixed_chunks

__all__ = [
    'AntSystem',
    'Phase',
    'ForkJoinPool',
    'check_ledger',
    'fixed_chunks',
    'make_run_config',
    'run',
    'run_problem',
]
