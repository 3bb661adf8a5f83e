"""Exception hierarchy.

Every mathematical failure carries a ``witness``: the lexicographically
first index tuple that violates the checked identity.
"""


class BinarySpaceError(ValueError):
    """Base class for all errors raised by this package."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InputError(BinarySpaceError):
    """Malformed input: wrong shapes, out-of-range entries, bad files."""


class CarrierMismatchError(BinarySpaceError):
    pass


class NotInvertibleError(BinarySpaceError):
    pass


class BoundExceededError(BinarySpaceError):
    """A requested enumeration or closure would exceed its configured bound."""


class GroupAxiomError(BinarySpaceError):
    pass


class NonAssociativeError(GroupAxiomError):
    pass


class NoIdentityError(GroupAxiomError):
    pass


class MissingInverseError(GroupAxiomError):
    pass


class NotSubgroupError(BinarySpaceError):
    pass


class NotNormalError(BinarySpaceError):
    pass


class UnknownGroupError(InputError):
    pass


class ActionAxiomError(BinarySpaceError):
    pass


class IdentityAxiomError(ActionAxiomError):
    pass


class CocycleError(ActionAxiomError):
    pass


class NonInvertibleLayerError(ActionAxiomError):
    pass


class NotWellDefinedError(BinarySpaceError):
    pass


class GroupMismatchError(BinarySpaceError):
    pass


class NotDistributiveError(BinarySpaceError):
    pass


class NotTransitiveError(BinarySpaceError):
    pass


class NotEffectiveError(BinarySpaceError):
    pass


class RepresentativeError(BinarySpaceError):
    """A map on cosets turned out to depend on the chosen representative."""
