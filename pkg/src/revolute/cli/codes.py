from enum import IntEnum


class ExitStatus(IntEnum):
    SUCCESS = 0
    USAGE_ERROR = 1
    DOMAIN_ERROR = 2
    VERIFICATION_FAILED = 3
