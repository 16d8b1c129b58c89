"""Exception types shared across the package."""


class StepBudgetExceeded(RuntimeError):
    """A rewriting or correction loop ran past its configured step budget.

    Raised instead of looping silently; almost always indicates a convention
    error upstream rather than a genuinely hard instance.
    """


class ConventionError(RuntimeError):
    """An internal consistency requirement failed.

    Examples: a bar-matrix row with odd derivative at 1, a non-antisymmetric
    residual in the canonical-basis solve, a non-unit pivot in the cellular
    change of basis.  These conditions are theorems under the implemented
    conventions, so a failure means the conventions disagree somewhere.
    """


class ZeroGramDeterminant(RuntimeError):
    """The Gram determinant vanished identically (never expected generically)."""
