"""Toolkit exception types, each tagged with a machine-parsable kind for the CLI."""


class ToolkitError(Exception):
    kind = "internal"


class ConfigError(ToolkitError):
    """Bad or missing configuration key/value."""

    kind = "config"


class DataFormatError(ToolkitError):
    """Malformed corpus, embedding, or decode file."""

    kind = "format"

    def __init__(self, message, path=None, line=None):
        loc = ""
        if path is not None:
            loc += f"{path}:"
        if line is not None:
            loc += f"{line}:"
        super().__init__(f"{loc} {message}" if loc else message)
        self.path = path
        self.line = line


class ShapeError(ToolkitError):
    """Tensor operands with incompatible shapes."""

    kind = "shape"


class CheckpointError(ToolkitError):
    """Unreadable or incompatible model checkpoint."""

    kind = "checkpoint"
