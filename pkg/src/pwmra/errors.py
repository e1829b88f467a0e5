"""Shared exception types."""


class ConstructionError(RuntimeError):
    """An exact identity failed during construction.

    Carries the name of the identity that failed so callers (and the CLI)
    can report which guarantee broke.
    """

    def __init__(self, identity: str, detail: str = ""):
        self.identity = identity
        self.detail = detail
        msg = f"exact check failed: {identity}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class InvalidParameterError(ValueError):
    """Parameters outside the validity range of a formula."""
