"""Dispatch for compiled combinator programs.

A Combinator names a task plus the index and parameters it closes
over.  Running one hands control to the task's driver; an unknown task
burns the whole budget without an answer, matching how junk indices
decode to the diverger.
"""

from __future__ import annotations

from .machine import Combinator, RunOutcome


def combinator_run(prog: Combinator, oracle, input_code, budget) -> RunOutcome:
    # imported lazily: the drivers themselves compile Combinators
    if prog.task == "repair":
        from .repair import repair_run
        return repair_run(prog, oracle, input_code, budget)
    if prog.task == "recover":
        from .recovery import recover_run
        return recover_run(prog, oracle, input_code, budget)
    return RunOutcome("diverged", budget, note=f"unknown task {prog.task!r}")
