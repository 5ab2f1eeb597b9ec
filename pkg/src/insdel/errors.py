"""Exception hierarchy shared by all modules.

DomainError covers bad parameters (CLI exit 1); ScaleCapExceeded covers
refusals to run past desk-scale enumeration caps (CLI exit 2).
"""


class InsdelError(Exception):
    pass


class DomainError(InsdelError, ValueError):
    pass


class AlphabetMismatch(DomainError):
    pass


class LengthMismatch(DomainError):
    pass


class UndefinedDistance(DomainError):
    pass


class ContextMismatch(DomainError):
    pass


class NonUnitError(DomainError):
    pass


class ScaleCapExceeded(InsdelError):
    pass
