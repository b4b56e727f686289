"""
Parser for the extended regular-expression grammar

Grammar, loosest binding first:
    union      := intersect ('|' intersect)*
    intersect  := concat ('&' concat)*
    concat     := unary unary*
    unary      := '!' unary | postfix
    postfix    := atom '*'*
    atom       := symbol | '∅' | '#' | 'ε' | '_' | '(' union ')'
Whitespace between tokens is ignored.
"""
import sys
from pathlib import Path
from typing import Optional

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from utils.errors import AlphabetError, RegexSyntaxError

from .alphabet import Alphabet
from .regex import (
    EMPTY, EPSILON, Language, Literal, Node,
    complement, concat, intersect, star, union,
)

EMPTY_TOKENS = ("∅", "#")
EPSILON_TOKENS = ("ε", "_")
_STOP = ")|&"


class _Reader:
    """Cursor over one regex text"""

    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def peek(self) -> Optional[str]:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        char = self.peek()
        self.pos += 1
        return char

    def expect(self, char: str):
        found = self.peek()
        if found != char:
            what = "end of input" if found is None else repr(found)
            raise RegexSyntaxError(f"expected {char!r} but found {what}", self.pos)
        self.pos += 1

    def parse_union(self) -> Node:
        parts = [self.parse_intersect()]
        while self.peek() == "|":
            self.take()
            parts.append(self.parse_intersect())
        return union(*parts)

    def parse_intersect(self) -> Node:
        parts = [self.parse_concat()]
        while self.peek() == "&":
            self.take()
            parts.append(self.parse_concat())
        return intersect(*parts)

    def parse_concat(self) -> Node:
        parts = [self.parse_unary()]
        while self.peek() is not None and self.peek() not in _STOP:
            parts.append(self.parse_unary())
        return concat(*parts)

    def parse_unary(self) -> Node:
        if self.peek() == "!":
            self.take()
            return complement(self.parse_unary())
        return self.parse_postfix()

    def parse_postfix(self) -> Node:
        node = self.parse_atom()
        while self.peek() == "*":
            self.take()
            node = star(node)
        return node

    def parse_atom(self) -> Node:
        char = self.peek()
        if char is None:
            raise RegexSyntaxError("unexpected end of input", self.pos)
        if char == "(":
            self.take()
            node = self.parse_union()
            self.expect(")")
            return node
        if char in EMPTY_TOKENS:
            self.take()
            return EMPTY
        if char in EPSILON_TOKENS:
            self.take()
            return EPSILON
        if char in _STOP or char in "*!":
            raise RegexSyntaxError(f"unexpected {char!r}", self.pos)
        if char not in self.alphabet:
            raise AlphabetError(
                f"symbol {char!r} at position {self.pos} is not in alphabet {self.alphabet}", char
            )
        self.take()
        return Literal(char)


class RegexParser:
    """Parses regex text over a fixed alphabet into normalized languages"""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet

    def parse(self, text: str) -> Language:
        """
        Parse regex text into a Language

        Args:
            text: Expression in the grammar described in the module docstring

        Returns:
            Language: the normalized language

        Raises:
            RegexSyntaxError: malformed text, with the offending position
            AlphabetError: a symbol outside the alphabet
        """
        reader = _Reader(text, self.alphabet)
        node = reader.parse_union()
        if reader.peek() is not None:
            raise RegexSyntaxError(f"unexpected {reader.peek()!r}", reader.pos)
        return Language(node, self.alphabet)


def parse_regex(text: str, alphabet: Alphabet) -> Language:
    """Parse regex text over an alphabet"""
    return RegexParser(alphabet).parse(text)
