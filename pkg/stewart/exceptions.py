class StewartError(Exception):
    """
    Base class of all errors raised by this application.
    """


class PreconditionError(StewartError, ValueError):
    """
    An operation has been invoked with arguments violating its precondition.
    """


class UnresolvedHole(StewartError):
    """
    The single ``?`` of a Stewart word never gets filled, because the pattern sequence ends
    in ``{e,f}^ω``, and no fill symbol was given.
    """
    def __init__(self, position):
        self.position = position
        msg = "Unresolved hole at position {}; pass a fill symbol to choose one of both Stewart words."
        super().__init__(msg.format(position))


class NotAStewartWord(StewartError):
    """
    The outputs of an automaton are inconsistent with every Stewart pattern.
    """


class InternalConsistencyError(StewartError):
    """
    Something which must be unreachable has been reached.
    """


class NumerationError(StewartError, ValueError):
    """
    A digit does not fit its base, or a base is out of range.
    """


class BaseMismatch(StewartError, ValueError):
    """
    The track bases of an input or of two automata do not fit together.
    """


class StateCapExceeded(StewartError):
    """
    A construction created more live states than allowed by ``STEWART_STATE_CAP``.
    """
    def __init__(self, cap, operation):
        self.cap = cap
        self.operation = operation
        msg = "{} exceeded the cap of {} live states."
        super().__init__(msg.format(operation, cap))


class WalnutFormatError(StewartError):
    """
    An automaton file in Walnut text format could not be read.
    """
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = "line {}: {}".format(lineno, message)
        super().__init__(message)


class QuerySyntaxError(StewartError):
    """
    A query, a script or a regular expression could not be parsed.
    """
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "{} (line {}, column {})".format(message, line, column)
        super().__init__(message)


class BaseInferenceError(StewartError):
    """
    The numeration bases of the variables in a formula contradict each other.
    """


class UnresolvedName(StewartError):
    """
    A formula refers to a predicate or word automaton unknown to the session.
    """


class DuplicateName(StewartError):
    """
    A name is already bound in the session.
    """


class FreeVariableMismatch(StewartError):
    """
    The declared variable ordering does not match the free variables of a formula.
    """
