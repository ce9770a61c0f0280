"""Exception hierarchy shared by all wograph modules.

Every error carries a short machine-readable ``code`` (its class name) so the
CLI can emit structured error JSON. ``InputError`` subclasses map to exit
status 2, ``TooLarge`` to exit status 3.
"""


class WographError(Exception):
    @property
    def code(self) -> str:
        return type(self).__name__


class InputError(WographError):
    """Invalid input: bad graph, bad cover, mismatched ambient, etc."""


class TooLarge(WographError):
    """Instance exceeds a configured size cap for exhaustive computation."""


# graph construction
class DuplicateVertex(InputError): pass
class SelfLoop(InputError): pass
class AntiparallelArcs(InputError): pass
class NonPositiveWeight(InputError): pass
class SourceWeightNotOne(InputError): pass
class UnknownVertex(InputError): pass
class RuleReferencesUnknownVertex(InputError): pass
class EmptyAttachSet(InputError): pass
class ConstructionShapeViolation(InputError): pass
class NotAFiveCycle(InputError): pass

# ideals
class AmbientMismatch(InputError): pass
class ZeroIdeal(InputError): pass
class NotSquareFree(InputError): pass
class VariableMismatch(InputError): pass
class OutOfBox(InputError): pass
class VectorTooSmall(InputError): pass

# covers / decomposition
class NotACover(InputError): pass
class NotStrong(InputError): pass
class InternalInconsistency(WographError):
    """The primary-decomposition identity failed; indicates a bug."""

# chordality / orderings
class NotAPermutation(InputError): pass
class InvalidPEO(InputError): pass
class IsolatedVertex(InputError): pass

# classifiers
class NotAPath(InputError): pass
class NotACycle(InputError): pass
class NoLeafPerfectMatching(InputError): pass
class BadHint(InputError): pass
