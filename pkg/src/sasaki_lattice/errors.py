"""Exception hierarchy.

Validation errors carry a ``witness`` tuple of element indices (or other
small values) that exhibits the failure, so callers can report it without
re-running the check.
"""


class SasakiLatticeError(Exception):
    """Base class for every error raised by this package."""


class WitnessedError(SasakiLatticeError, ValueError):
    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)

    def __str__(self):
        base = super().__str__()
        if self.witness:
            return f"{base} (witness: {self.witness})"
        return base


class OmlError(WitnessedError):
    """Candidate tables do not describe an orthomodular lattice."""


class NotAPoset(OmlError):
    pass


class NotALattice(OmlError):
    pass


class TrivialLattice(NotALattice):
    """One-element lattice: bottom equals top."""


class NotAnOrthocomplementation(OmlError):
    pass


class NotOrthomodular(OmlError):
    pass


class PastingNotOrthomodular(NotOrthomodular):
    """A Greechie pasting whose glued structure fails an OML axiom.

    ``cause`` is the underlying :class:`OmlError` raised by ``verify_oml``.
    """

    def __init__(self, message, witness=(), cause=None):
        super().__init__(message, witness)
        self.cause = cause


class BaseMismatch(SasakiLatticeError, ValueError):
    """Operands live in different lattices (or ambient spaces)."""


class TooLarge(SasakiLatticeError, ValueError):
    """An enumeration was requested above the configured size cap."""


class ContainsBot(WitnessedError):
    pass


class NotPairwiseOrthogonal(WitnessedError):
    pass


class JoinNotTop(WitnessedError):
    pass


class NotFiner(WitnessedError):
    pass


class NotComparable(WitnessedError):
    pass


class NotBooleanSubalgebra(WitnessedError):
    pass


class NotASasakiFilter(WitnessedError):
    pass


class ImproperFilter(WitnessedError):
    pass


class InvalidDescription(WitnessedError):
    pass


class DimMismatch(SasakiLatticeError, ValueError):
    pass


class DimTooSmall(SasakiLatticeError, ValueError):
    pass


class PrecondViolated(SasakiLatticeError, ValueError):
    pass


class ZeroVector(SasakiLatticeError, ValueError):
    pass


class MalformedPairs(SasakiLatticeError, ValueError):
    pass


class UnknownCheck(SasakiLatticeError, KeyError):
    pass
