"""
Domain models: pydantic configuration and report records, problem matrices and ant state.
"""
from src.models.aco_models import (
    BenchmarkPlan,
    DepositStrategy,
    DepositVariant,
    EdgeWeightType,
    InstanceSpec,
    IterationRecord,
    LedgerSnapshot,
    Parameters,
    RunConfig,
    RunReport,
    SelectionStrategy,
    SelectionVariant,
    StrategyCombo,
)

__all__ = [
    'BenchmarkPlan',
    'DepositStrategy',
    'DepositVariant',
    'EdgeWeightType',
    'InstanceSpec',
    'IterationRecord',
    'LedgerSnapshot',
    'Parameters',
    'RunConfig',
    'RunReport',
    'SelectionStrategy',
    'SelectionVariant',
    'StrategyCombo',
]
