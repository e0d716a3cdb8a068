"""Exception types shared across the engine."""


class NotInner(Exception):
    """Raised when an inner-automorphism operation is applied to an
    automorphism with nontrivial abelianization."""


class InternalInconsistency(Exception):
    """Raised when a re-verification step fails.  This always indicates a
    bug in the engine (e.g. a composition-convention mismatch), never a
    bad input."""
