class InvalidInputError(ValueError):
    """Malformed numerical input (shape, NaN, negative cost, asymmetric matrix)."""


class ConfigurationError(ValueError):
    """A distance was requested without the parameters it needs."""


class EmptyObservationError(ValueError):
    """The distance is undefined for an empty multiset or sequence."""


class InfeasibleError(ValueError):
    """Transport marginals do not balance."""


class InvalidMatchingError(ValueError):
    pass


class EmptySpaceError(ValueError):
    """A sampler produced no elements."""


class OracleScaleError(RuntimeError):
    """A brute-force enumeration would exceed its size guard."""


class CorpusError(ValueError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
