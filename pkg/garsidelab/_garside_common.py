from collections import namedtuple
import json


class NotReduced(ValueError):
    pass


class LetterOutOfRange(ValueError):
    pass


class StrandMismatch(ValueError):
    pass


class ZeroLength(ValueError):
    pass


class NotRigid(ValueError):
    pass


class BudgetExceeded(Exception):
    """Raised when a search hits its configured cap.

    The partially built result is kept on ``partial`` so callers can still
    inspect it; it is never exhaustive.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
        self.exhaustive = False


class NotSupported(Exception):
    pass


class FamilyError(ValueError):
    pass


class BadBoundaryColumns(FamilyError):
    pass


class NotM0(FamilyError):
    pass


class BadSlot(FamilyError):
    pass


class NotTerminal(FamilyError):
    pass


class FamilyConsistencyError(AssertionError):
    pass


class FamilyRegimeWarning(UserWarning):
    pass


class OracleSizeWarning(UserWarning):
    pass


class CheckResult(
    namedtuple("CheckResult", ["name", "anchor", "parameters", "status", "details"])
):
    def __str__(self):
        params = ", ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        return f"[{self.status}] {self.name} ({self.anchor}; {params}): {self.details}"


class VerificationError(Exception):
    def __init__(self, *failures):
        message = json.dumps([str(f) for f in failures], indent=2, ensure_ascii=False)
        super().__init__(message)
        self.failures = failures
