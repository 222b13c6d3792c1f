"""Exception hierarchy shared across the package."""


class PlaylabError(Exception):
    """Base class for package errors."""


class RuleViolation(PlaylabError):
    """An action was rejected by the game rules.

    ``precondition`` names the violated rule, e.g. ``"moves_left"`` or
    ``"shot_range"``.
    """

    def __init__(self, precondition: str, detail: str = ""):
        self.precondition = precondition
        msg = f"illegal action: violates '{precondition}'"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class ConfigError(PlaylabError):
    """A scenario / run configuration failed validation.

    ``field`` carries the dotted path of the offending entry so the CLI can
    print field-level diagnostics.
    """

    def __init__(self, field: str, detail: str):
        self.field = field
        super().__init__(f"invalid config at '{field}': {detail}")


class CheckpointMismatch(PlaylabError):
    """A checkpoint does not match the requested architecture or format."""


class TrainingDiverged(PlaylabError):
    """The learner produced a non-finite loss; the run is aborted."""
