"""Error taxonomy shared by every module."""


class InvalidModulusError(ValueError):
    """A modulus below 2 was supplied where modular reduction is required."""


class OutOfDomainError(ValueError):
    """Arguments fall outside the mathematical domain of the operation."""


class ResourceGuardError(RuntimeError):
    """The request exceeds a configured resource limit.

    `partial` carries whatever evidence was computed before the guard fired,
    e.g. an incomplete factorization.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
