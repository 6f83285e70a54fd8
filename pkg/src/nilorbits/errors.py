"""Exception types shared by every module.

Each error carries a short machine-readable ``code`` so the command line can
emit a stable error object.
"""


class NilOrbitError(Exception):
    code = "Error"

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class NotSorted(NilOrbitError, ValueError):
    code = "NotSorted"


class TotalMismatch(NilOrbitError, ValueError):
    code = "TotalMismatch"


class InvalidOrbit(NilOrbitError, ValueError):
    code = "InvalidOrbit"


class NotSpecial(NilOrbitError, ValueError):
    code = "NotSpecial"


class NotRichardson(NilOrbitError, ValueError):
    code = "NotRichardson"


class NotPolarization(NilOrbitError, ValueError):
    code = "NotPolarization"


class InvalidDatum(NilOrbitError, ValueError):
    code = "InvalidDatum"


class UnsupportedDatum(NilOrbitError, ValueError):
    code = "UnsupportedDatum"


class UnsupportedAlgebra(NilOrbitError, ValueError):
    code = "UnsupportedAlgebra"


class DivideByZero(NilOrbitError, ZeroDivisionError):
    code = "DivideByZero"


class NotExpandable(NilOrbitError, ValueError):
    code = "NotExpandable"


class OutOfRange(NilOrbitError, ValueError):
    code = "OutOfRange"


class EmptyInput(NilOrbitError, ValueError):
    code = "EmptyInput"


class ResourceLimit(NilOrbitError, RuntimeError):
    code = "ResourceLimit"
