"""Exception types shared across the package."""


class EdgestreamError(Exception):
    """Base class for all package errors."""


class ConfigError(EdgestreamError):
    """Invalid configuration value or combination."""


class InputError(EdgestreamError):
    """Input data violates a documented precondition."""


class ShapeError(EdgestreamError):
    """Array or layer dimensions do not line up."""


class ParseError(EdgestreamError):
    """Malformed event file. Carries the byte offset of the failure."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class FormatError(EdgestreamError):
    """Malformed or incompatible weights file."""


class SimInternalError(EdgestreamError):
    """Simulator protocol violation. Indicates a bug, not bad input."""


class SimDeadlockError(EdgestreamError):
    """No simulated unit can make progress while work remains."""
