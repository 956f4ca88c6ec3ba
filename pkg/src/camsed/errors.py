"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Bad user input: malformed files, incompatible shapes, out-of-range config."""
