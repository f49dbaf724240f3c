"""Exception types shared across the package."""


class SemitrussError(Exception):
    """Base class for every error this package raises deliberately."""


class SizeMismatch(SemitrussError):
    """Two tables that must share a carrier have different sizes."""


class NotAssociative(SemitrussError):
    """An operation required to be a semigroup is not associative."""


class NotLeftCancellative(SemitrussError):
    """An operation required to be left-cancellative (and associative) is not."""


class NotIdempotent(SemitrussError):
    """The element passed as an idempotent does not satisfy e*e = e."""


class NotGroup(SemitrussError):
    """An operation required to be a group table is not one."""


class NotInverseSemigroup(SemitrussError):
    """The operation does not admit unique inverses for every element."""


class SigmaNotBijective(SemitrussError):
    """The map a -> a∘e is not a bijection, so the conversion is undefined."""


class NotSemibrace(SemitrussError):
    """The (diamond, bullet) pair fails the semi-brace conditions."""

    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness
        msg = f"not a semi-brace: {reason}"
        if witness is not None:
            msg += f" at {witness}"
        super().__init__(msg)


class LambdaMissing(SemitrussError):
    """No lambda table is available (none supplied and none derivable)."""


class SemiTrussLawViolation(SemitrussError):
    """A supplied lambda table violates the distributive law."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"distributive law fails at (a, b, c) = {witness}")


class HypothesisFails(SemitrussError):
    """The induced-lambda hypothesis does not hold for this structure."""


class CarrierTooLarge(SemitrussError):
    """Requested enumeration exceeds the supported carrier sizes."""


class ParseError(SemitrussError):
    """Malformed input file; carries 1-based line and column when known."""

    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        loc = source or "<input>"
        if line is not None:
            loc += f":{line}"
            if column is not None:
                loc += f":{column}"
        super().__init__(f"{loc}: {message}")


class RangeError(ParseError):
    """A table entry is outside the carrier range [0, n)."""

    def __init__(self, entry, n, line=None, column=None, source=None):
        self.entry = entry
        super().__init__(
            f"entry {entry} outside carrier range [0, {n})", line, column, source
        )


class InternalCheckError(SemitrussError):
    """An identity that must hold under its hypotheses failed.

    This never indicates bad input: it means an implementation bug, so the
    offending instance is dumped in full for replay.
    """

    def __init__(self, what, **instance):
        self.instance = instance
        dump = "; ".join(f"{k}={v!r}" for k, v in instance.items())
        super().__init__(f"internal check failed: {what} [{dump}]")
