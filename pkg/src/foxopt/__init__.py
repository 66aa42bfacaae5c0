"""FOX and modified FOX (mFOX) swarm optimizers with a benchmark harness."""
from .core import Bounds, BudgetExhausted, ConfigError, Problem, RunConfig, RunRecord
from .fox import FoxParams, fox_run
from .mfox import MfoxParams, mfox_run

__all__ = [
    "Bounds", "BudgetExhausted", "ConfigError", "Problem", "RunConfig", "RunRecord",
    "FoxParams", "fox_run", "MfoxParams", "mfox_run",
]
