"""Exception types shared across the package."""


class ContractError(ValueError):
    """An operation was called with arguments that violate its contract."""


class DimensionError(ContractError):
    """Shapes or axes do not line up."""


class VocabularyError(ContractError):
    """A token id is outside the vocabulary."""


class ConfigError(ValueError):
    """Bad configuration file or unknown key."""


class ParseError(ValueError):
    """A file on disk is malformed.

    ``offset`` is the byte position where parsing failed, when known.
    """

    def __init__(self, message, path=None, offset=None):
        if path is not None:
            message = f"{path}: {message}"
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.path = path
        self.offset = offset


class NumericalAbort(RuntimeError):
    """Training produced a non-finite loss; carries the diagnostic dump path."""

    def __init__(self, message, dump_path=None):
        super().__init__(message)
        self.dump_path = dump_path
