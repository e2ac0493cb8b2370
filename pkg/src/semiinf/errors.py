"""Exception hierarchy shared by every module."""


class SemiInfError(Exception):
    """Base class for all errors raised by this package."""


class MalformedCartan(SemiInfError, ValueError):
    pass


class NotFiniteType(SemiInfError, ValueError):
    pass


class NotDominant(SemiInfError, ValueError):
    pass


class NotInNegCone(SemiInfError, ValueError):
    pass


class NotDeepEnough(SemiInfError, ValueError):
    """Some lambda+mu fails to be dominant, so the stable decomposition does not apply."""


class SkippedNotDominant(SemiInfError):
    """A chain point where lambda_k + mu is not dominant; recorded, never fatal."""


class ChainExhausted(SemiInfError):
    """No stabilization detected within the chain. Finite evidence only."""


class InternalInconsistency(SemiInfError, AssertionError):
    """A theorem-guaranteed property failed: this is a bug, not a finding."""
