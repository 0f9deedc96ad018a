"""Shared exception types for searches and the decomposition pipeline."""

from __future__ import annotations


class CapExceeded(Exception):
    """A capped search ran out of budget before finding a witness."""

    def __init__(self, what: str, candidates_tried: int, caps) -> None:
        super().__init__(
            f"{what}: exhausted caps after {candidates_tried} candidates "
            f"(max_offset_degree={caps.max_offset_degree}, max_candidates={caps.max_candidates})"
        )
        self.what = what
        self.candidates_tried = candidates_tried
        self.caps = caps


class NonCoprimeInput(ValueError):
    """Progression inputs share a factor, so no prime can be found."""


class StrictUnavailable(Exception):
    """A bounded identity sequence is not implemented for this case.

    Raised by the bridge/collapse phases when they cannot meet their strict
    factor budget; callers fall back to the Euclidean decomposition and flag
    the phase, keeping correctness unconditional.
    """

    def __init__(self, phase: str, reason: str) -> None:
        super().__init__(f"{phase}: {reason}")
        self.phase = phase
        self.reason = reason


class BudgetExceeded(Exception):
    """A strict-mode phase produced more factors than its contract allows."""


class VerificationError(AssertionError):
    """A replayed word failed to reproduce its matrix; signals a pipeline bug."""
