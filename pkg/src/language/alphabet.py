"""
Finite ordered alphabets and words over them
"""
import sys
from pathlib import Path
from typing import Iterable, Iterator, Optional, Tuple

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from utils.config import LANGUAGE_CONFIG, RESERVED_SYMBOLS
from utils.errors import AlphabetError
from utils.helpers import shortlex_words


class Alphabet:
    """
    Ordered finite set of single-character symbols

    The declaration order is the canonical order used for shortlex
    enumeration, BFS exploration and counterexample search.
    """

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: Iterable[str], max_size: Optional[int] = None):
        symbols = tuple(symbols)
        limit = max_size if max_size is not None else LANGUAGE_CONFIG["max_alphabet_size"]
        if len(symbols) > limit:
            raise AlphabetError(f"alphabet has {len(symbols)} symbols, limit is {limit}")

        index = {}
        for symbol in symbols:
            if not isinstance(symbol, str) or len(symbol) != 1:
                raise AlphabetError(f"symbols must be single characters, got {symbol!r}", symbol)
            if symbol in RESERVED_SYMBOLS:
                raise AlphabetError(f"symbol {symbol!r} is reserved by the regex grammar", symbol)
            if symbol in index:
                raise AlphabetError(f"duplicate symbol {symbol!r}", symbol)
            index[symbol] = len(index)

        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "_index", index)

    def __setattr__(self, name, value):
        raise AttributeError("Alphabet is immutable")

    @classmethod
    def from_string(cls, text: str, max_size: Optional[int] = None) -> "Alphabet":
        """Build an alphabet from a compact declaration such as 'ab'"""
        return cls(list(text), max_size=max_size)

    def index(self, symbol: str) -> int:
        """Position of a symbol in the canonical order"""
        try:
            return self._index[symbol]
        except KeyError:
            raise AlphabetError(f"symbol {symbol!r} is not in alphabet {self}", symbol) from None

    def check_word(self, word: str) -> str:
        """Validate that every symbol of a word belongs to the alphabet"""
        for symbol in word:
            if symbol not in self._index:
                raise AlphabetError(f"symbol {symbol!r} of word {word!r} is not in alphabet {self}", symbol)
        return word

    def words(self, max_length: int) -> Iterator[str]:
        """All words up to max_length, shortlex ordered"""
        return shortlex_words(self.symbols, max_length)

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __str__(self) -> str:
        return "".join(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({self.symbols!r})"

    def as_tuple(self) -> Tuple[str, ...]:
        return self.symbols
