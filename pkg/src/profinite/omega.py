"""
ω-terms: finite words extended with idempotent powers

Grammar:
    term    := factor*
    factor  := atom ('^w')*
    atom    := symbol | 'ε' | '_' | '(' term ')'
Whitespace between tokens is ignored; the empty term denotes the empty word.
"""
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple, Union

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from language.alphabet import Alphabet
from monoids.monoid import SigmaMonoid, idempotent_power
from utils.errors import AlphabetError, ConnectorError, RegexSyntaxError

from .system import ProfiniteSystem, ProfiniteWordApprox


@dataclass(frozen=True)
class OmegaSymbol:
    symbol: str

    def __str__(self) -> str:
        return self.symbol


@dataclass(frozen=True)
class OmegaConcat:
    parts: Tuple["OmegaTerm", ...]

    def __str__(self) -> str:
        if not self.parts:
            return "ε"
        return "".join(f"({p})" if isinstance(p, OmegaConcat) else str(p) for p in self.parts)


@dataclass(frozen=True)
class OmegaPower:
    child: "OmegaTerm"

    def __str__(self) -> str:
        inner = str(self.child)
        if isinstance(self.child, OmegaConcat):
            inner = f"({inner})"
        return f"{inner}^w"


OmegaTerm = Union[OmegaSymbol, OmegaConcat, OmegaPower]


def omega_concat(*parts: OmegaTerm) -> OmegaTerm:
    flat = []
    for part in parts:
        if isinstance(part, OmegaConcat):
            flat.extend(part.parts)
        else:
            flat.append(part)
    if len(flat) == 1:
        return flat[0]
    return OmegaConcat(tuple(flat))


class _TermReader:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def peek(self) -> Optional[str]:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def term(self) -> OmegaTerm:
        factors = []
        while self.peek() is not None and self.peek() != ")":
            factors.append(self.factor())
        return omega_concat(*factors) if factors else OmegaConcat(())

    def factor(self) -> OmegaTerm:
        node = self.atom()
        while self.peek() == "^":
            self.pos += 1
            if self.peek() != "w":
                raise RegexSyntaxError("expected 'w' after '^'", self.pos)
            self.pos += 1
            node = OmegaPower(node)
        return node

    def atom(self) -> OmegaTerm:
        char = self.peek()
        if char == "(":
            self.pos += 1
            node = self.term()
            if self.peek() != ")":
                raise RegexSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return node
        if char in ("ε", "_"):
            self.pos += 1
            return OmegaConcat(())
        if char is None or char in "^)":
            raise RegexSyntaxError(f"unexpected {'end of input' if char is None else repr(char)}", self.pos)
        if char not in self.alphabet:
            raise AlphabetError(f"symbol {char!r} at position {self.pos} is not in alphabet {self.alphabet}", char)
        self.pos += 1
        return OmegaSymbol(char)


def parse_omega_term(text: str, alphabet: Alphabet) -> OmegaTerm:
    """
    Parse an ω-term such as 'a^wb' or '(ab)^w'

    Raises:
        RegexSyntaxError: malformed text, with position
        AlphabetError: a symbol outside the alphabet
    """
    reader = _TermReader(text, alphabet)
    term = reader.term()
    if reader.peek() is not None:
        raise RegexSyntaxError(f"unexpected {reader.peek()!r}", reader.pos)
    return term


def evaluate_in_node(node: SigmaMonoid, term: OmegaTerm) -> int:
    """Value of an ω-term in one Σ-monoid; x^ω is the idempotent power of x"""
    if isinstance(term, OmegaSymbol):
        node.alphabet.index(term.symbol)
        return node.generators[term.symbol]
    if isinstance(term, OmegaConcat):
        return node.monoid.product(evaluate_in_node(node, part) for part in term.parts)
    if isinstance(term, OmegaPower):
        return idempotent_power(node.monoid, evaluate_in_node(node, term.child))
    raise TypeError(f"unknown ω-term {term!r}")


def eval_omega_term(system: ProfiniteSystem, term: OmegaTerm) -> ProfiniteWordApprox:
    """
    Componentwise value of an ω-term over a system

    Raises:
        ConnectorError: if the result is not connector-compatible, which
            a validated system rules out
    """
    result = ProfiniteWordApprox(system, tuple(evaluate_in_node(node, term) for node in system.nodes))
    broken = result.compatibility_violation()
    if broken is not None:
        raise ConnectorError(f"ω-term {term} is incompatible along connector {broken.source}->{broken.target}")
    return result
