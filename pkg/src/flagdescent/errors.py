"""Exception types shared by the package.

Every error raised on purpose derives from :class:`DescentError`.  The CLI
maps :class:`ParseError` to exit code 2 and everything else to exit code 3.
"""


class DescentError(ValueError):
    code = "error"


class ParseError(DescentError):
    code = "parse-error"


class InvalidParams(DescentError):
    code = "invalid-params"


class DimensionMismatch(DescentError):
    code = "dimension-mismatch"


class RankMismatch(DescentError):
    code = "rank-mismatch"


class InvalidRank(DescentError):
    code = "invalid-rank"


class DegenerateBasis(DescentError):
    code = "degenerate-basis"


class NotAPositiveSystem(DescentError):
    code = "not-a-positive-system"


class NotInNormalizer(DescentError):
    code = "not-in-normalizer"


class SatakeNotStable(DescentError):
    code = "satake-not-stable"


class NotWellPosed(DescentError):
    code = "not-well-posed"


class WbarwNotInTorus(DescentError):
    code = "wbarw-not-in-torus"


class UnsupportedValue(DescentError):
    code = "unsupported-value"


class UnsupportedExtension(DescentError):
    code = "unsupported-extension"


class PiPrimeNotStable(DescentError):
    code = "pi-prime-not-stable"


class NotAntidominant(DescentError):
    code = "not-antidominant"


class CocycleDataInconsistent(DescentError):
    code = "cocycle-data-inconsistent"


class ZeroEntry(DescentError):
    code = "zero-entry"


class UnknownFamily(ParseError):
    code = "unknown-family"
