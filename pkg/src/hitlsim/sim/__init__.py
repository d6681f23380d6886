"""Human-in-the-loop alert pipeline simulation."""

from hitlsim.sim.engine import (
    HitlState,
    SimSummary,
    Simulation,
    run_replicates,
    run_simulation,
    summarize,
)
from hitlsim.sim.records import (
    ActionRecord,
    AlertRecord,
    EventLog,
    FeedbackLabel,
    LogBuilder,
    LogEntry,
)
from hitlsim.sim.scheduler import Scheduler

__all__ = [
    "ActionRecord",
    "AlertRecord",
    "EventLog",
    "FeedbackLabel",
    "HitlState",
    "LogBuilder",
    "LogEntry",
    "Scheduler",
    "SimSummary",
    "Simulation",
    "run_replicates",
    "run_simulation",
    "summarize",
]
