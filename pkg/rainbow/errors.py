"""Exception hierarchy shared by the library modules and the management commands."""


class RainbowError(Exception):
    """Base class for every error raised by the rainbow app."""

    # Exit code used by the CLI when this error escapes a subcommand.
    exit_code = 1


class GraphError(RainbowError):
    """Invalid graph data, unparsable input, or a structural precondition failure."""


class FamilyError(RainbowError):
    """Family parameter violations and subdivision provenance problems."""


class ColoringError(RainbowError):
    """Malformed colorings, colorer preconditions, or a failed post-verification."""


class CertificateError(RainbowError):
    """A graph does not have the structure a concrete certificate needs."""


class BudgetExceeded(RainbowError):
    """Enumeration exceeded the configured node or time budget."""

    exit_code = 2

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes

    def __reduce__(self):
        return (type(self), (str(self), self.nodes))


class CrossCheckError(RainbowError):
    """A recomputed quantity disagrees with its hard-coded published value."""

    exit_code = 3
