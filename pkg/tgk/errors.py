"""
Exception hierarchy for the Topological Graph Kit
"""

from typing import Any, List, Optional


class TGKError(Exception):
    """Base class for every error raised by tgk"""


class GraphValidationError(TGKError, ValueError):
    """
    A graph violates its type invariants

    Args:
        problems: One message per violation found
    """

    def __init__(self, problems: List[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems) or "invalid graph")


class GraphParseError(TGKError, ValueError):
    """Graph JSON could not be parsed or does not follow the schema"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class UnknownCorpusError(TGKError, KeyError):
    """A corpus name did not resolve to a built-in graph"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown corpus graph"


class PreconditionError(TGKError, ValueError):
    """A documented precondition of an operation does not hold"""


class InfinitePathSpaceError(PreconditionError):
    """
    The finite path space from a vertex is infinite

    Args:
        message: Human readable reason
        witness: Offending cycle (list of edge ids) or omega edge id
    """

    def __init__(self, message: str, witness: Any = None):
        self.witness = witness
        super().__init__(message)


class BoundExceededError(TGKError):
    """
    An enumeration would exceed a configured bound

    Args:
        bound: The configured limit
        value: The size that was requested
        flag: CLI flag that raises the limit
    """

    def __init__(self, what: str, bound: int, value: int, flag: str):
        self.bound = bound
        self.value = value
        self.flag = flag
        super().__init__(f"{what}: {value} exceeds bound {bound} (raise with {flag})")


class ConsistencyError(TGKError, AssertionError):
    """An internal cross-check between two computations disagreed"""
