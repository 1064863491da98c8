"""Exception types shared across the package."""


class NumericalError(RuntimeError):
    """A linear-algebra or special-function routine could not produce a
    trustworthy result (e.g. Cholesky failure after jitter escalation)."""


class NotConvergedError(RuntimeError):
    """An operation was requested on a model whose iterative fit did not
    converge."""


class ConfigError(ValueError):
    """Experiment configuration failed validation.

    Carries the full list of messages so callers can report every problem
    at once instead of the first one found.
    """

    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))
