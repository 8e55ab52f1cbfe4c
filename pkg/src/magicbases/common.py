"""Small shared types: verification checks, search results and errors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


class InfeasibleError(ValueError):
    """Parameters admit no construction (e.g. a block would be empty)."""


class PreconditionError(ValueError):
    """An input violates a documented precondition; ``witness`` shows where."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Check:
    property: str
    passed: bool
    witness: Any = None

    def to_dict(self) -> dict:
        return {"property": self.property, "pass": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class SearchResult:
    """Extremal value, its lexicographically least witness, and search stats."""

    value: int
    witness: Any
    nodes_explored: int
    exhaustive: bool
