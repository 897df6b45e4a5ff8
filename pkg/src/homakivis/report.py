"""Pass/fail verdicts with replayable witnesses.

A witness pins down the first failing basis tuple (lexicographic scan
order, so reports are deterministic) together with both evaluated
sides; re-evaluating the identity there must reproduce the inequality.
Checks that sample random vectors instead record the sampled vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional, Sequence, Tuple, Union

from .linear import Vector


class PreconditionFailed(ValueError):
    """A checker was invoked on input that fails its stated precondition."""

    def __init__(self, message: str, report: "CheckReport | None" = None) -> None:
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Witness:
    indices: Tuple[int, ...]
    lhs: Vector
    rhs: Vector
    vectors: Optional[Tuple[Vector, ...]] = None  # set when found by sampling


@dataclass(frozen=True)
class CheckReport:
    prop: str
    holds: bool
    witness: Optional[Witness] = None

    def __post_init__(self) -> None:
        if self.holds == (self.witness is not None):
            raise ValueError("witness must be present exactly when the check fails")


Sides = Callable[..., Tuple[Vector, Vector]]


def sweep(prop: str, dim: int, arity: int, sides: Sides) -> CheckReport:
    """Exhaustive check of lhs == rhs over all basis index tuples."""
    for idx in product(range(dim), repeat=arity):
        lhs, rhs = sides(*idx)
        if lhs != rhs:
            return CheckReport(prop, False, Witness(idx, lhs, rhs))
    return CheckReport(prop, True)


def sample_sweep(prop: str, vectors: Sequence[Tuple[Vector, ...]], sides: Sides) -> CheckReport:
    """Check lhs == rhs at given vector tuples (for non-multilinear identities)."""
    for args in vectors:
        lhs, rhs = sides(*args)
        if lhs != rhs:
            return CheckReport(prop, False, Witness((), lhs, rhs, vectors=tuple(args)))
    return CheckReport(prop, True)


AnyReport = Union[CheckReport, "PipelineReport"]


@dataclass(frozen=True)
class PipelineReport:
    """Aggregate of named sub-checks; `holds` is set by the aggregating check."""

    prop: str
    stages: Tuple[Tuple[str, AnyReport], ...]
    holds: bool

    def stage(self, name: str) -> AnyReport:
        for stage_name, rep in self.stages:
            if stage_name == name:
                return rep
        raise KeyError(name)

    @property
    def witness(self) -> Optional[Witness]:
        for _, rep in self.stages:
            if not rep.holds:
                return rep.witness
        return None


def all_hold(prop: str, stages: Sequence[Tuple[str, AnyReport]]) -> PipelineReport:
    return PipelineReport(prop, tuple(stages), all(rep.holds for _, rep in stages))
