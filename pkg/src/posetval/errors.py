"""Exception types shared across the package."""


class PosetvalError(Exception):
    """Base class for all errors raised by posetval."""


class InputError(PosetvalError, ValueError):
    """Malformed or inapplicable input."""


class CycleError(InputError):
    """Cover relations contain a directed cycle."""


class NotchError(InputError):
    """The triple does not form a valid notch."""


class DisconnectedError(InputError):
    """A skew diagram (or poset) is required to be connected but is not."""


class NotStronglyPlanarError(InputError):
    """The supplied embedding does not exhibit P as strongly planar."""


class ShapeError(InputError):
    """A closed form was requested for a poset or cone of the wrong shape."""


class DependenceError(InputError):
    """Vectors expected to be linearly independent are dependent."""


class CyclicityError(InputError):
    """W is not cyclic with respect to V."""


class PoleError(PosetvalError, ZeroDivisionError):
    """A substitution annihilated a denominator factor."""


class ParseError(InputError):
    """Syntax error in an input file, with position information."""

    def __init__(self, message, line=None, column=None, source=None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
            if column is not None:
                where += f"{column}:"
        super().__init__(f"{where} {message}" if where else message)


class EmbeddingError(InputError):
    """A rotation system does not describe a planar embedding of the Hasse diagram."""
