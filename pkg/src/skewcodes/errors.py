"""Exception types shared across the package."""


class SkewCodesError(Exception):
    pass


class PreconditionError(SkewCodesError, ValueError):
    """A mathematical hypothesis required by an operation does not hold."""


class EnumerationLimitError(SkewCodesError):
    """Brute-force enumeration would exceed the hard word cap."""


class ConfigError(SkewCodesError, ValueError):
    """A JSON job configuration is malformed or inconsistent."""
