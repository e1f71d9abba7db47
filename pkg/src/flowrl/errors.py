"""Exception types shared across the package."""


class FlowRlError(Exception):
    """Base class for all package-specific errors."""


class BehindCamera(FlowRlError):
    """Point has non-positive depth in the camera frame."""


class NonPositiveDepth(FlowRlError):
    """Depth must be strictly positive."""


class TooManyEndEffectors(FlowRlError):
    """More physical end-effectors than the configured maximum."""


class IndexOutOfRange(FlowRlError, IndexError):
    """Step index outside the schedule."""


class NonFiniteValue(FlowRlError, ArithmeticError):
    """A computation produced NaN or infinity."""


class ScheduleMismatch(FlowRlError):
    """Sampled action was produced under a different noise schedule."""


class ShapeMismatch(FlowRlError, ValueError):
    """Tensor arguments have inconsistent shapes."""


class EmptyGroup(FlowRlError, ValueError):
    """A reward group contains no members."""


class EmptyDataset(FlowRlError, ValueError):
    """Training requires at least one sample."""


class NonPositiveStd(FlowRlError, ValueError):
    """Noise standard deviations must be strictly positive."""


class LengthMismatch(FlowRlError, ValueError):
    """Paired sequences differ in length."""


class EmptyInput(FlowRlError, ValueError):
    """Input sequence is empty."""


class FinishBeyondHorizon(FlowRlError, ValueError):
    """Requested finish step lies beyond the episode horizon."""


class DimensionMismatch(FlowRlError, ValueError):
    """Images differ in size."""


class TooSmall(FlowRlError, ValueError):
    """Image below the minimum size the estimator supports."""


class MalformedTrajectoryFile(FlowRlError):
    """Trajectory file failed header or size validation."""
