"""Exception types shared across the package."""


class Tangle3Error(Exception):
    """Base class for all package-specific errors."""


class InvalidDiagramError(Tangle3Error):
    """A chord diagram violates a structural invariant.

    Raised when crossings are unpaired, chords cross within a face,
    a puncture carries more than one arc end, or edge lists and links
    disagree about which crossings exist.
    """


class InputError(Tangle3Error):
    """User-supplied data cannot be interpreted (bad file, bad word, bad counts)."""


class NotRealizableError(Tangle3Error):
    """Requested coordinates do not correspond to any curve system."""


class PaperViolation(Tangle3Error):
    """An invariant the algorithm depends on failed at runtime.

    This signals a genuine soundness problem (or a corrupted input that
    slipped past validation), never a routine user error.
    """


class StepBudgetExceeded(Tangle3Error):
    """The detection loop exceeded its move budget without terminating."""

    def __init__(self, budget: int, message: str | None = None):
        self.budget = budget
        super().__init__(message or f"step budget of {budget} moves exceeded")
