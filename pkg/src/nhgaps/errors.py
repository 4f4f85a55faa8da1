"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an operation receives data violating its preconditions."""


class ConfigError(ValueError):
    """Raised on invalid sweep configuration; carries the offending field path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
