"""
Domain errors raised across the toolkit

Every error is a ValueError so callers can treat bad input uniformly.
"""
from typing import Any, Optional, Tuple


class AlphabetError(ValueError):
    """Alphabet declaration is invalid or a symbol is outside it"""

    def __init__(self, message: str, symbol: Optional[str] = None):
        super().__init__(message)
        self.symbol = symbol


class RegexSyntaxError(ValueError):
    """Regex text does not conform to the grammar"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class TransitionTableError(ValueError):
    """Transition table is not total or points at an unknown state"""

    def __init__(self, message: str, state: Any = None, symbol: Optional[str] = None):
        super().__init__(message)
        self.state = state
        self.symbol = symbol


class CongruenceError(ValueError):
    """Partition is not a congruence for the transition structure"""

    def __init__(self, message: str, pair: Optional[Tuple[Any, Any]] = None,
                 symbol: Optional[str] = None):
        super().__init__(message)
        self.pair = pair
        self.symbol = symbol


class MorphismError(ValueError):
    """Map between Σ-sets or monoids has the wrong shape"""


class MonoidTableError(ValueError):
    """Multiplication table is not square or has out-of-range entries"""


class AssociativityError(MonoidTableError):
    """(x·y)·z differs from x·(y·z)"""

    def __init__(self, triple: Tuple[int, int, int]):
        x, y, z = triple
        super().__init__(f"associativity fails for ({x}, {y}, {z})")
        self.triple = triple


class IdentityError(MonoidTableError):
    """Declared identity does not act as a two-sided unit"""

    def __init__(self, identity: int, element: int):
        super().__init__(f"{identity} is not an identity: fails on element {element}")
        self.identity = identity
        self.element = element


class ConnectorError(ValueError):
    """Connector between profinite nodes is not a compatible homomorphism"""

    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None,
                 symbol: Optional[str] = None):
        super().__init__(message)
        self.pair = pair
        self.symbol = symbol


class FormatError(ValueError):
    """A JSON document does not match the expected layout"""
