"""Exception types shared across the package.

Everything derives from HilbertSeqError so callers can catch the whole
family; most also subclass ValueError to stay friendly to generic code.
"""


class HilbertSeqError(Exception):
    """Base class for all errors raised by this package."""


class SizingError(HilbertSeqError, ValueError):
    """Requested curve exceeds the supported integer width."""


class DomainError(HilbertSeqError, ValueError):
    """Value outside the domain of a curve operation."""


class UnknownSymbolError(HilbertSeqError, ValueError):
    """Sequence character not present in the configured alphabet."""

    def __init__(self, symbol: str, position: int | None = None):
        self.symbol = symbol
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"symbol {symbol!r}{where} not in alphabet")


class EncodeError(HilbertSeqError, ValueError):
    """Sequence cannot be encoded (empty, or empty after filtering)."""


class ParseError(HilbertSeqError, ValueError):
    """Malformed FASTA or CSV input; message carries the line/row number."""


class SchemaError(HilbertSeqError, ValueError):
    """Input file lacks a required column or field."""


class SplitError(HilbertSeqError, ValueError):
    """Dataset cannot be partitioned as requested."""
