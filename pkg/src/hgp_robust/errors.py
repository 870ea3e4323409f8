"""Exception types raised across the package."""


class HgpError(Exception):
    """Base class for every error this package raises on purpose."""


class KernelTooLarge(HgpError):
    pass


class MalformedAlist(HgpError):
    pass


class MalformedMatrix(HgpError):
    pass


class InvalidFamilyParams(HgpError):
    pass


class GenerationFailed(HgpError):
    pass


class FormulaBruteMismatch(HgpError):
    """Formula and brute-force parameters disagree. This is always a bug."""


class VerificationFailed(HgpError):
    def __init__(self, clause: str, message: str):
        super().__init__(f"clause ({clause}) failed: {message}")
        self.clause = clause


class ColoringFailed(HgpError):
    pass


class NoLogicals(HgpError):
    pass


class SearchBudgetExceeded(HgpError):
    pass


class InvalidSchedule(HgpError):
    pass
