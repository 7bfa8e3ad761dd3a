# -*- coding: UTF-8 -*-
# cSpell:ignore homhopf
"""Check reports and the error types of the engine.

Axiom failures are data (a :class:`CheckReport`), not exceptions. Exceptions are reserved for
input that cannot be checked at all.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, List, NamedTuple, Sequence, Tuple

import numpy as np


class DimensionError(ValueError):
    """Two maps or vectors do not fit together."""


class StructureError(ValueError):
    """The input is not a structure of the requested kind (eg a structure map is singular)."""


class PreconditionError(ValueError):
    """A builder's mathematical precondition failed. The failing report is kept in ``report``."""

    def __init__(self, message: str, report: "CheckReport"):
        super().__init__(message)
        self.report = report


class SpecFileError(ValueError):
    """A structure-constant file is malformed."""

    def __init__(self, message: str, path: str = "", line: int | None = None, key: str = ""):
        self.path = str(path)
        self.line = line
        self.key = key
        where = self.path
        if line is not None:
            where += f":{line}"
        if key:
            where += f" [{key}]"
        super().__init__(f"{where}: {message}" if where else message)


class ConditionResult(NamedTuple):
    """Outcome of a single named condition.

    ``witness`` is the lexicographically smallest failing basis tuple, in the variable order of the
    condition's domain; ``lhs`` and ``rhs`` are the two sides evaluated there.
    """
    name: str
    passed: bool
    witness: Tuple[int, ...] | None = None
    lhs: Tuple[Fraction, ...] | None = None
    rhs: Tuple[Fraction, ...] | None = None
    variables: Tuple[str, ...] = ()
    note: str = ""


class CheckReport:
    """Ordered collection of condition results for one object."""

    def __init__(self, subject: str, results: Sequence[ConditionResult] | None = None):
        self.subject = subject
        self.results: List[ConditionResult] = list(results or [])

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[ConditionResult]:
        return [r for r in self.results if not r.passed]

    def add(self, result: ConditionResult) -> ConditionResult:
        logging.getLogger().debug("%s: %s %s", self.subject, result.name, "pass" if result.passed else f"FAIL at {result.witness}")
        self.results.append(result)
        return result

    def extend(self, other: "CheckReport") -> "CheckReport":
        for r in other.results:
            self.results.append(r)
        return self

    def __getitem__(self, name: str) -> ConditionResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(r.name == name for r in self.results)

    def names(self) -> List[str]:
        return [r.name for r in self.results]

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready form; scalars as ``"p/q"`` strings."""
        return {
            "subject": self.subject,
            "passed": self.passed,
            "conditions": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "witness": list(r.witness) if r.witness is not None else None,
                    "variables": list(r.variables),
                    "lhs": [str(v) for v in r.lhs] if r.lhs is not None else None,
                    "rhs": [str(v) for v in r.rhs] if r.rhs is not None else None,
                    "note": r.note,
                }
                for r in self.results
            ],
        }

    def __repr__(self) -> str:
        return f"CheckReport({self.subject!r}, passed={self.passed}, failures={[r.name for r in self.failures]})"


def compare_maps(name: str, lhs, rhs, factor_dims: Sequence[int], variables: Sequence[str] = (), note: str = "") -> ConditionResult:
    """Compare two linear maps column by column over the basis tuples of their common domain.

    ``factor_dims`` gives the tensor factors of the domain, so a failing column is reported as a
    multi-index. The first failing column in flat order is the lexicographically smallest witness.
    """
    if lhs.entries.shape != rhs.entries.shape:
        raise DimensionError(f"{name}: sides have shapes {lhs.entries.shape} and {rhs.entries.shape}")
    diff = lhs.entries != rhs.entries
    bad = np.flatnonzero(diff.any(axis=0))
    if len(bad) == 0:
        return ConditionResult(name, True, variables=tuple(variables), note=note)
    col = int(bad[0])
    if factor_dims:
        witness = tuple(int(i) for i in np.unravel_index(col, tuple(factor_dims)))
    else:
        witness = ()
    return ConditionResult(name, False, witness,
                           tuple(lhs.entries[:, col]), tuple(rhs.entries[:, col]),
                           tuple(variables), note)
