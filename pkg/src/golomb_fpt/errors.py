"""Exception hierarchy shared across the package."""


class GolombError(Exception):
    """Base class for every error raised by golomb_fpt."""


class DegenerateRulerError(GolombError, ValueError):
    """Operation needs more marks than the ruler has."""


class RulerFormatError(GolombError, ValueError):
    """Malformed ruler input: duplicates, negatives, unparsable tokens."""


class MagnitudeError(GolombError, OverflowError):
    """A mark (or a generated mark) does not fit the machine-integer guard."""


class OracleSizeError(GolombError, ValueError):
    """Brute-force oracle refused an input above its size guard."""


class FormulaError(GolombError, ValueError):
    """Malformed antimonotone formula or source graph."""
