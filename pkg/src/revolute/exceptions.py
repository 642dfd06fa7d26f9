class RevoluteError(Exception):
    pass


class DomainError(RevoluteError, ValueError):
    pass


class SingularParameterError(DomainError):
    pass


class SingularSampleError(DomainError):
    pass


class UnsupportedCaseError(RevoluteError):
    pass


class ConfigError(RevoluteError):
    pass


class VerificationError(RevoluteError):
    pass


class UsageError(RevoluteError):
    pass


class ExportError(RevoluteError):
    pass
