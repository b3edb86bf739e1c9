"""Exception classes, each tied to a CLI exit class."""

EXIT_CERTIFIED = 0
EXIT_CHECK_FAILED = 1
EXIT_PRECONDITION = 2
EXIT_INPUT = 3


class InstanceError(ValueError):
    """The instance violates a hypothesis or genericity precondition."""

    exit_code = EXIT_PRECONDITION


class NormalizationError(InstanceError):
    """No single scalar relates the cubic to F_X on the bitangency points."""


class DegenerateFormError(InstanceError):
    """The foliation 1-form has a nonconstant common factor."""


class InputFormatError(ValueError):
    exit_code = EXIT_INPUT
