"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` so the CLI and the
tests can match on it without parsing messages.
"""


class EccTreeError(Exception):
    code = "ERROR"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class TreeParseError(EccTreeError, ValueError):
    """Raised when an edge list does not describe a tree.

    ``code`` is one of ``DUPLICATE_EDGE``, ``DISCONNECTED``,
    ``BAD_VERTEX_ID``, ``WRONG_EDGE_COUNT`` or ``MALFORMED``.
    """

    code = "MALFORMED"


class ParameterError(EccTreeError, ValueError):
    code = "PARAM_OUT_OF_RANGE"


class TransformError(EccTreeError, ValueError):
    code = "NOT_A_PATH_JUNCTION"


class EnumerationLimitError(EccTreeError, ValueError):
    code = "N_TOO_LARGE"


class EmptyClassError(EccTreeError, LookupError):
    code = "EMPTY_CLASS"
