"""Exception hierarchy shared by all edgelab modules."""


class EdgelabError(Exception):
    """Base class for every error raised by edgelab."""


class DomainError(EdgelabError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class CapacityError(EdgelabError, ValueError):
    """An input exceeds a hard size cap (vertex count, edge count, ...)."""


class ParseError(EdgelabError, ValueError):
    """Malformed graph6 input."""
