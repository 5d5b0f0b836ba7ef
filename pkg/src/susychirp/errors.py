"""Exception types shared across the package."""


class SusyChirpError(Exception):
    """Base class for errors raised by this package."""


class DomainError(SusyChirpError, ValueError):
    """Invalid parameter or a grid outside the region where a profile is defined."""


class SingularityError(DomainError):
    """Evaluation requested too close to a pole of a singular profile."""


class AnnihilationError(SusyChirpError):
    """A ladder step produced the zero function, so no partner mode exists."""


class InconclusiveError(SusyChirpError):
    """A check could not decide either way, e.g. no usable sample points."""
