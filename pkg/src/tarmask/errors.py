"""Exception taxonomy shared across the package.

CLI exit codes map onto these groups: usage/validation errors exit 1,
data/format errors exit 2, numeric failures exit 3.
"""


class TarmaskError(Exception):
    """Base class for all package errors."""


class StructuralMismatch(TarmaskError):
    """Mask, weight, or score payloads disagree with the layer specs."""


class InvalidSparsity(TarmaskError):
    """Sparsity target outside [0, 1)."""


class InvalidRatio(TarmaskError):
    """Recovery ratio outside [0, 1]."""


class InvalidCounts(TarmaskError):
    """Counts (D, w, R, trials) violate their admissible ranges."""


class PlanMismatch(TarmaskError):
    """A revival plan does not describe the mask it is applied to."""


class AlreadyAlive(TarmaskError):
    """Attempt to revive an index whose mask bit is already 1."""


class NonFiniteWeight(TarmaskError):
    """Weights contain NaN or infinity."""


class ShapeMismatch(TarmaskError):
    """Array shapes do not chain or do not match the network spec."""


class Diverged(TarmaskError):
    """Training loss became non-finite."""


class FormatError(TarmaskError):
    """Malformed mask/spec file. Carries the byte offset of the defect."""

    def __init__(self, reason: str, offset: int | None = None):
        self.offset = offset
        self.reason = reason
        if offset is None:
            super().__init__(reason)
        else:
            super().__init__(f"{reason} (at byte offset {offset})")


class VersionError(TarmaskError):
    """Mask file declares an unsupported format version."""
