"""Exception hierarchy shared by every module."""


class ColorTwistError(Exception):
    """Base class for all domain errors raised by colortwist."""


class IncompatibleConstraints(ColorTwistError):
    pass


class NoSolution(ColorTwistError):
    pass


class DivisionByZero(ColorTwistError, ZeroDivisionError):
    pass


class NotARootOfUnity(ColorTwistError):
    pass


class LevelMismatch(ColorTwistError):
    pass


class PresentationMismatch(ColorTwistError):
    pass


class InfiniteGroup(ColorTwistError):
    pass


class NotASign(ColorTwistError):
    pass


class NotSymmetric(ColorTwistError):
    pass


class RelationIncompatible(ColorTwistError):
    """A value matrix does not factor through the presented group."""

    def __init__(self, message, relation_index=None, relation=None):
        super().__init__(message)
        self.relation_index = relation_index
        self.relation = relation


class DiagonalObstruction(ColorTwistError):
    """sigma(v, v) != 1 for the word v expressing t^n during adjunction."""

    def __init__(self, message, generator=None, n=None, word=None, value=None):
        super().__init__(message)
        self.generator = generator
        self.n = n
        self.word = word
        self.value = value


class GradingError(ColorTwistError):
    pass


class UnknownBasisName(ColorTwistError, KeyError):
    pass


class UnknownDemo(ColorTwistError):
    pass


class InputParseError(ColorTwistError):
    pass
