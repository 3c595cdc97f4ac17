"""Exception types shared across the package."""


class OrbitcatError(Exception):
    """Base class for all orbitcat errors."""


class QuiverSyntaxError(OrbitcatError):
    """Malformed quiver DSL input; carries 1-based line/column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class QuiverShapeError(OrbitcatError):
    """Structural violation: cycle, loop, multiple arrow, disconnected."""


class NotDynkinError(OrbitcatError):
    """Underlying graph is not an ADE diagram."""


class InvariantViolationError(OrbitcatError):
    """An internal consistency check failed; signals a bug, not bad input."""


class OutOfWindowError(OrbitcatError):
    """A vertex map left the derived window; enlarge the window."""


class WindowTooSmallError(OrbitcatError):
    """A windowed check has an empty interior; increase the radius."""


class PathExplosionError(OrbitcatError):
    """Path enumeration exceeded the configured cap (resource limit)."""


class SearchBudgetExceededError(OrbitcatError):
    """Enumeration search exceeded its node budget (resource limit)."""


class NoExchangeError(OrbitcatError):
    """No replacement class completes an almost-complete tilting object."""


class NonUniqueExchangeError(OrbitcatError):
    """More than one replacement class found; model bug."""
