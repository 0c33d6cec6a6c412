from typing import Optional


class MapkitError(Exception):
    """Base class for every error raised by mapkit"""


class WitnessParseError(MapkitError, ValueError):
    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class InvalidDecompositionError(MapkitError, ValueError):
    pass


class PreconditionError(MapkitError, ValueError):
    pass


class InvariantBreach(MapkitError, RuntimeError):
    """A structural lemma was falsified; `diagnostic` names the witnesses"""

    def __init__(self, message: str, diagnostic: Optional[dict] = None):
        self.diagnostic = diagnostic or {}
        super().__init__(f"{message} {self.diagnostic}" if diagnostic else message)


class OracleSizeError(MapkitError, ValueError):
    pass


class OracleMismatchError(MapkitError):
    pass


class InvalidWitnessError(MapkitError, ValueError):
    """A parsed witness failed validation; `violations` lists the report lines"""

    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("; ".join(violations))
