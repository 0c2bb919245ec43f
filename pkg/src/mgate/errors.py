"""Exception hierarchy shared across the package.

Each class maps to one CLI exit code so batch callers can dispatch on
failure modes without parsing messages.
"""


class MgateError(Exception):
    """Base class for all package-specific errors."""

    exit_code = 1


class ConfigError(MgateError):
    """Invalid configuration text or violated type invariants.

    Carries the full list of violations, not just the first one found.
    """

    exit_code = 2

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class RegimeError(MgateError):
    """Parameters outside the regime where the model is defined.

    Examples: pump off while evaluating the pump-normalized
    susceptibilities, or a tuner driven exactly on the four-photon
    resonance (ill-posed denominator).
    """

    exit_code = 3


class NumericalError(MgateError):
    """A numerical procedure failed: no root in bracket, singular
    linear system, zero-slope target equation, stability guard."""

    exit_code = 4
