"""Exception hierarchy for the hypermaps package.

Every domain error raised by the library derives from :class:`HypermapError`,
so callers (and the CLI) can distinguish invalid input from programming bugs.
"""


class HypermapError(Exception):
    """Base class for all domain errors."""


class SizeMismatch(HypermapError):
    """Two permutations of different sizes were combined."""


class CycleFormatError(HypermapError):
    """Malformed cycle notation, or a label repeated within it."""


class MissingLabel(HypermapError):
    """A label of the universe does not occur where it must."""


class DuplicateLabel(HypermapError):
    """A label occurs more than once in a section that requires uniqueness."""


class PairLengthMismatch(HypermapError):
    """The two cycles of a declared vertex/hyperedge pair differ in length."""


class IotaUnsolvable(HypermapError):
    """No side-pairing involution satisfies the mirror constraints."""


class SelfPairedOrbit(HypermapError):
    """An orbit is its own mirror image; proper pairs are required."""


class NotOrientable(HypermapError):
    """An orientable-only operation was applied to a non-orientable hypermap."""


class NotConnected(HypermapError):
    """A connected-only operation was applied to a disconnected hypermap."""


class EdgeCapExceeded(HypermapError):
    """Subset enumeration was requested beyond the configured hyperedge cap."""


class CoefficientOverflow(HypermapError):
    """A polynomial coefficient left the checked 64-bit range."""


class BadCorner(HypermapError):
    """A corner reference does not name a label of the given vertex."""


class DuplicateVertexPick(HypermapError):
    """The same vertex was picked twice for one side of a bar-amalgamation."""


class EdgeDegreeUnsupported(HypermapError):
    """Subdivision is implemented only for hyperedges with three incidences."""


class UnknownFamily(HypermapError):
    """No closed form (or generator) is known for the requested family."""
