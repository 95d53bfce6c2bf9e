"""Exceptions raised by rigid-quiver.

Every class derives from a built-in exception so callers can catch the
broad category (``ValueError``, ``OverflowError``, ``RuntimeError``).
"""


class QuiverError(ValueError):
    """Malformed quiver text, out-of-range vertex, loop or duplicate arrow."""


class NotDynkinError(QuiverError):
    """A connected component is not a simply-laced Dynkin diagram."""


class NotTypeAError(QuiverError):
    """A type-A operation received a quiver that is not a labeled path."""


class DimensionVectorError(ValueError):
    """Dimension vector of the wrong length, negative, or out of bounds."""


class NotARootError(ValueError):
    """An argument that must be a positive root is not one."""


class EulerOverflowError(OverflowError):
    """Checked 64-bit integer arithmetic overflowed."""


class OracleBoundError(ValueError):
    """The brute-force oracle was asked for a dimension vector above its bound."""


class OracleInconsistencyError(RuntimeError):
    """The brute-force search found zero or several Ext-free decompositions."""


class RepresentationError(ValueError):
    """Representation with mismatched shapes, field or quiver, or a bad file."""
