"""Exception hierarchy shared by every module."""
from __future__ import annotations


class UMTCError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(UMTCError):
    """Input data is malformed (wrong shapes, negative or non-integer entries, bad indices)."""


class ValidationError(UMTCError):
    """Input is well formed but violates an axiom.

    ``violations`` holds the offending records, each naming the axiom and the indices involved.
    """

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class BundleParseError(UMTCError):
    """A bundle file could not be parsed as JSON or does not follow the schema layout."""


class IncompleteTableError(UMTCError):
    """An F or R table lacks an entry on an admissible channel."""


class NumericalError(UMTCError):
    """An iterative numerical routine failed to converge."""


class InvalidGaugeError(UMTCError):
    """A gauge transform has a zero entry or violates unit normalization."""


class IncoherentDataError(UMTCError):
    """Derived quantities (e.g. twists) come out inconsistent, signalling incoherent input."""


class UnsupportedError(UMTCError):
    """The requested operation is not defined for this input (degenerate, multiplicities, ...)."""


class InconsistencyError(UMTCError):
    """A reconstruction disagrees with its input beyond the allowed deviation."""


class CapacityError(UMTCError):
    """The brute-force bound of an enumeration was exceeded."""


class MissingDataError(UMTCError):
    """The bundle does not carry the data an operation needs (e.g. no R table)."""


class SolverIncompleteError(UMTCError):
    """The hexagon solver could not bound an unknown to a finite candidate set."""


class FactorizationCertificateError(UMTCError):
    """A prime factorization could not be certified by Kronecker factorization of S and T."""


class OrderingError(UMTCError):
    """A check was invoked before the check it depends on passed."""
