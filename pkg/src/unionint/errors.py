"""Exception hierarchy shared by every module."""


class UnionIntError(ValueError):
    """Base class for all domain errors raised by this package."""


class NOutOfRange(UnionIntError):
    pass


class ElementOutOfRange(UnionIntError):
    pass


class DuplicateSet(UnionIntError):
    pass


class ParamOutOfRange(UnionIntError):
    pass


class NotUniform(UnionIntError):
    pass


class NoEdges(UnionIntError):
    pass


class PreconditionFailed(UnionIntError):
    pass


class TooLarge(UnionIntError):
    pass


class BadExtras(UnionIntError):
    pass
