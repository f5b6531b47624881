"""Exception hierarchy for the engine.

The CLI maps these onto process exit codes: config errors to 2, file format
errors to 3, numerical failures to 4, remote-denoiser failures to 5.
"""


class EdmInvertError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(EdmInvertError):
    """Invalid configuration value or combination."""


class FormatError(EdmInvertError):
    """Malformed tensor file or serialized artifact."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class NumericalError(EdmInvertError):
    """Non-finite values or numerically impossible operation."""


class DegenerateChannelError(NumericalError):
    """A per-channel statistic is too small to divide by."""

    def __init__(self, channel: int, value: float, what: str = "std"):
        super().__init__(
            f"channel {channel} has degenerate {what} {value:.3e} (below 1e-12)"
        )
        self.channel = channel


class TransportError(EdmInvertError):
    """Remote denoiser unreachable or connection lost."""


class DenoiserTimeout(TransportError):
    """Remote denoiser did not answer within the configured timeout."""


class ProtocolError(EdmInvertError):
    """Remote denoiser sent something the wire protocol does not allow."""


class MalformedFrame(ProtocolError):
    """Frame magic, type, or length fields are invalid."""


class ShapeMismatch(ProtocolError):
    """Tensor dimensions disagree between request and response."""


class RemoteDenoiserFailure(ProtocolError):
    """The remote denoiser answered with an error frame."""


class StageError(EdmInvertError):
    """A pipeline stage failed; wraps the original error with the stage name."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause
