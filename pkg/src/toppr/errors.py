"""Exception taxonomy for toppr.

Every error raised by the library derives from TopprError so callers can
catch one base class. The CLI maps DegenerateData to exit code 4 and all
other TopprError subclasses to exit code 3; flag-level problems never reach
these classes (argparse handles them with exit code 2).
"""


class TopprError(Exception):
    """Base class for all toppr errors."""


class IoError(TopprError):
    """File could not be opened, read, or written."""


class MalformedHeader(TopprError):
    """Array file violates the supported container format."""


class UnsupportedDtype(TopprError):
    """Array file stores a dtype outside the supported set."""


class Not2D(TopprError):
    """Array is not a 2-D matrix."""


class NonFinite(TopprError):
    """Input contains NaN or infinity."""


class RaggedRows(TopprError):
    """Text table rows have inconsistent column counts."""


class ParseError(TopprError):
    """Text table cell is not a number."""


class BadDims(TopprError):
    """Dimension argument outside its valid range."""


class DimMismatch(TopprError):
    """Two matrices that must share a feature dimension do not."""


class RowCountMismatch(TopprError):
    """Two matrices that must share a row count do not."""


class TooFewRows(TopprError):
    """Matrix has too few rows for the requested operation."""


class KTooLarge(TopprError):
    """Neighbor count k exceeds what the reference set supports."""


class DegenerateData(TopprError):
    """Data admits no meaningful density scale (e.g. zero bandwidth)."""


class BadAlpha(TopprError):
    """Significance level outside the open interval (0, 1)."""


class ZeroRepeats(TopprError):
    """Bootstrap repeat count must be at least 1."""


class BadSpec(TopprError):
    """Configuration value is invalid or inconsistent."""


class OutOfRange(TopprError):
    """Numeric argument outside its documented range."""
