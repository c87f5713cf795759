"""Exception types shared across the package."""


class GlowcastError(Exception):
    """Base class for all package errors."""


class DimensionError(GlowcastError):
    """Operand shapes are incompatible with the requested operation."""


class NumericError(GlowcastError):
    """Non-finite values appeared where finite ones are required."""


class ContractError(GlowcastError):
    """An operation was invoked in a way its contract forbids."""


class ConfigError(GlowcastError):
    """A configuration value is invalid."""


class IngestError(GlowcastError):
    """Malformed input data; carries the offending row when known."""

    def __init__(self, message, row=None):
        if row is not None:
            message = f"{message} (row {row})"
        super().__init__(message)
        self.row = row


class FitError(GlowcastError):
    """A statistical fit could not be computed."""


class TrainingDiverged(GlowcastError):
    """Training produced non-finite values."""

    def __init__(self, tensor_name):
        super().__init__(
            f"non-finite values first appeared in tensor '{tensor_name}'"
        )
        self.tensor_name = tensor_name
