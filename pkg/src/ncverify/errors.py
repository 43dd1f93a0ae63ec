"""Exception types raised across the package."""


class NCVerifyError(ValueError):
    """Base class for all errors raised by ncverify."""


class MissingVariable(NCVerifyError):
    pass


class BadShape(NCVerifyError):
    pass


class QuiverMismatch(NCVerifyError):
    pass


class CyclicQuiver(NCVerifyError):
    pass


class GeneratorMismatch(NCVerifyError):
    pass


class NotNilpotent(NCVerifyError):
    pass


class ParameterMismatch(NCVerifyError):
    pass


class BadParameter(NCVerifyError):
    pass


class InvalidTable(NCVerifyError):
    pass
