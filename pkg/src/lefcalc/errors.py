"""Exception types raised by lefcalc."""


class LefcalcError(Exception):
    """Base class for all library errors."""


class InputError(LefcalcError, ValueError):
    """Malformed or inconsistent user input."""


class SurfaceMismatch(InputError):
    """Two objects that must live on the same surface do not."""


class ChernClassNonzero(LefcalcError, ValueError):
    """An operation needing c1 = 0 was given a structure with c1 != 0."""


class NotInImage(LefcalcError, ValueError):
    """A linear system over the integers or rationals has no solution."""


class RotationAdjustmentError(NotInImage):
    """P.D. c1 does not lie in the subgroup generated by the doubled meridians."""


class NonIntegralGap(LefcalcError, ValueError):
    """Two d3 values differ by a non-integer."""


class IntegrityError(LefcalcError, RuntimeError):
    """An internal consistency check failed."""


class DocumentError(InputError):
    """A description file failed to parse or validate; carries a 1-based position."""

    def __init__(self, message, line=None, column=None, source=None):
        self.line, self.column, self.source = line, column, source
        where = source or "<input>"
        if line is not None:
            where += f":{line}:{column}"
        super().__init__(f"{where}: {message}")
