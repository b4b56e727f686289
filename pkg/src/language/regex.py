"""
Extended regular expressions in ACI normal form

Languages are held as immutable expression trees built only through the
normalizing constructors below, so structural equality of two trees is a
congruence and every expression has finitely many distinct derivatives.
"""
import functools
import sys
from pathlib import Path
from typing import FrozenSet, Tuple

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from utils.config import LANGUAGE_CONFIG
from utils.errors import AlphabetError

from .alphabet import Alphabet

_CACHE_SIZE = LANGUAGE_CONFIG["derivative_cache_size"]


class Node:
    """
    Base class of expression-tree nodes

    Nodes are compared by a canonical key: the constructor tag followed by
    the keys of the children. The same key orders Union/Intersect children.
    """

    __slots__ = ("key", "_hash")
    TAG = -1

    def _freeze(self, payload, child_hashes: Tuple[int, ...] = ()):
        object.__setattr__(self, "key", (self.TAG, payload))
        object.__setattr__(self, "_hash", hash((self.TAG, payload if not child_hashes else child_hashes)))

    def __setattr__(self, name, value):
        raise AttributeError("expression nodes are immutable")

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, Node) and self._hash == other._hash and self.key == other.key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Node") -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return f"{type(self).__name__}({to_regex_string(self)!r})"

    def children_of(self) -> Tuple["Node", ...]:
        return ()


class Empty(Node):
    __slots__ = ()
    TAG = 0

    def __init__(self):
        self._freeze(())


class Epsilon(Node):
    __slots__ = ()
    TAG = 1

    def __init__(self):
        self._freeze(())


class Literal(Node):
    __slots__ = ("symbol",)
    TAG = 2

    def __init__(self, symbol: str):
        object.__setattr__(self, "symbol", symbol)
        self._freeze(symbol)


class _Nary(Node):
    __slots__ = ("children",)

    def __init__(self, children: Tuple[Node, ...]):
        object.__setattr__(self, "children", tuple(children))
        self._freeze(tuple(c.key for c in self.children), tuple(c._hash for c in self.children))

    def children_of(self) -> Tuple[Node, ...]:
        return self.children


class Concat(_Nary):
    __slots__ = ()
    TAG = 3


class Union(_Nary):
    __slots__ = ()
    TAG = 4


class Intersect(_Nary):
    __slots__ = ()
    TAG = 5


class _Unary(Node):
    __slots__ = ("child",)

    def __init__(self, child: Node):
        object.__setattr__(self, "child", child)
        self._freeze(child.key, (child._hash,))

    def children_of(self) -> Tuple[Node, ...]:
        return (self.child,)


class Complement(_Unary):
    __slots__ = ()
    TAG = 6


class Star(_Unary):
    __slots__ = ()
    TAG = 7


EMPTY = Empty()
EPSILON = Epsilon()
SIGMA_STAR = Complement(EMPTY)


# --- normalizing constructors -------------------------------------------------

def literal(symbol: str) -> Node:
    return Literal(symbol)


def concat(*parts: Node) -> Node:
    """Concatenation, flattened, with ε removed and ∅ annihilating"""
    flat = []
    for part in parts:
        if isinstance(part, Empty):
            return EMPTY
        if isinstance(part, Epsilon):
            continue
        if isinstance(part, Concat):
            flat.extend(part.children)
        else:
            flat.append(part)
    if not flat:
        return EPSILON
    if len(flat) == 1:
        return flat[0]
    return Concat(tuple(flat))


def union(*parts: Node) -> Node:
    """Union, flattened, deduplicated and sorted; ∅ is the unit, Σ* absorbs"""
    items = set()
    for part in parts:
        if isinstance(part, Union):
            items.update(part.children)
        elif not isinstance(part, Empty):
            items.add(part)
    if SIGMA_STAR in items:
        return SIGMA_STAR
    if not items:
        return EMPTY
    if len(items) == 1:
        return next(iter(items))
    return Union(tuple(sorted(items)))


def intersect(*parts: Node) -> Node:
    """Intersection, flattened, deduplicated and sorted; Σ* is the unit, ∅ absorbs"""
    items = set()
    for part in parts:
        if isinstance(part, Empty):
            return EMPTY
        if isinstance(part, Intersect):
            items.update(part.children)
        elif part != SIGMA_STAR:
            items.add(part)
    if not items:
        return SIGMA_STAR
    if len(items) == 1:
        return next(iter(items))
    return Intersect(tuple(sorted(items)))


def complement(child: Node) -> Node:
    if isinstance(child, Complement):
        return child.child
    return Complement(child)


def star(child: Node) -> Node:
    if isinstance(child, (Empty, Epsilon)):
        return EPSILON
    if isinstance(child, Star):
        return child
    return Star(child)


@functools.lru_cache(maxsize=_CACHE_SIZE)
def normalize(node: Node) -> Node:
    """Rebuild a tree bottom-up through the normalizing constructors"""
    if isinstance(node, (Empty, Epsilon, Literal)):
        return node
    if isinstance(node, Concat):
        return concat(*(normalize(c) for c in node.children))
    if isinstance(node, Union):
        return union(*(normalize(c) for c in node.children))
    if isinstance(node, Intersect):
        return intersect(*(normalize(c) for c in node.children))
    if isinstance(node, Complement):
        return complement(normalize(node.child))
    if isinstance(node, Star):
        return star(normalize(node.child))
    raise TypeError(f"unknown expression node {node!r}")


# --- structural semantics -----------------------------------------------------

@functools.lru_cache(maxsize=_CACHE_SIZE)
def node_nullable(node: Node) -> bool:
    """ε-membership, computed structurally"""
    if isinstance(node, (Empty, Literal)):
        return False
    if isinstance(node, (Epsilon, Star)):
        return True
    if isinstance(node, (Concat, Intersect)):
        return all(node_nullable(c) for c in node.children)
    if isinstance(node, Union):
        return any(node_nullable(c) for c in node.children)
    if isinstance(node, Complement):
        return not node_nullable(node.child)
    raise TypeError(f"unknown expression node {node!r}")


@functools.lru_cache(maxsize=_CACHE_SIZE)
def node_derivative(node: Node, symbol: str) -> Node:
    """Brzozowski derivative a⁻¹L of a normal-form tree"""
    if isinstance(node, (Empty, Epsilon)):
        return EMPTY
    if isinstance(node, Literal):
        return EPSILON if node.symbol == symbol else EMPTY
    if isinstance(node, Concat):
        head = node.children[0]
        rest = concat(*node.children[1:])
        result = concat(node_derivative(head, symbol), rest)
        if node_nullable(head):
            result = union(result, node_derivative(rest, symbol))
        return result
    if isinstance(node, Union):
        return union(*(node_derivative(c, symbol) for c in node.children))
    if isinstance(node, Intersect):
        return intersect(*(node_derivative(c, symbol) for c in node.children))
    if isinstance(node, Complement):
        return complement(node_derivative(node.child, symbol))
    if isinstance(node, Star):
        return concat(node_derivative(node.child, symbol), node)
    raise TypeError(f"unknown expression node {node!r}")


def node_word_derivative(node: Node, word: str) -> Node:
    for symbol in word:
        node = node_derivative(node, symbol)
    return node


def node_contains(node: Node, word: str) -> bool:
    return node_nullable(node_word_derivative(node, word))


def node_symbols(node: Node) -> FrozenSet[str]:
    """Symbols occurring as literals anywhere in a tree"""
    found = set()
    stack = [node]
    while stack:
        current = stack.pop()
        if isinstance(current, Literal):
            found.add(current.symbol)
        stack.extend(current.children_of())
    return frozenset(found)


def node_size(node: Node) -> int:
    return 1 + sum(node_size(c) for c in node.children_of())


# --- printing -----------------------------------------------------------------

_UNION, _INTERSECT, _CONCAT, _COMPLEMENT, _STAR, _ATOM = range(1, 7)


def _render(node: Node) -> Tuple[str, int]:
    if isinstance(node, Empty):
        return "∅", _ATOM
    if isinstance(node, Epsilon):
        return "ε", _ATOM
    if isinstance(node, Literal):
        return node.symbol, _ATOM
    if isinstance(node, Union):
        return "|".join(_wrap(c, _INTERSECT) for c in node.children), _UNION
    if isinstance(node, Intersect):
        return "&".join(_wrap(c, _CONCAT) for c in node.children), _INTERSECT
    if isinstance(node, Concat):
        return "".join(_wrap(c, _COMPLEMENT) for c in node.children), _CONCAT
    if isinstance(node, Complement):
        return "!" + _wrap(node.child, _COMPLEMENT), _COMPLEMENT
    if isinstance(node, Star):
        return _wrap(node.child, _ATOM) + "*", _STAR
    raise TypeError(f"unknown expression node {node!r}")


def _wrap(node: Node, minimum: int) -> str:
    text, precedence = _render(node)
    return text if precedence >= minimum else f"({text})"


def to_regex_string(node: Node) -> str:
    """Canonical text for a tree; parsing it back yields the same normal form"""
    return _render(node)[0]


# --- the Language value -------------------------------------------------------

class Language:
    """
    A regular language over a fixed alphabet, held as a normal-form tree

    Instances are immutable; every operation returns a new value.
    """

    __slots__ = ("ast", "alphabet")

    def __init__(self, ast: Node, alphabet: Alphabet):
        stray = node_symbols(ast) - set(alphabet.symbols)
        if stray:
            symbol = sorted(stray)[0]
            raise AlphabetError(f"symbol {symbol!r} is not in alphabet {alphabet}", symbol)
        object.__setattr__(self, "ast", normalize(ast))
        object.__setattr__(self, "alphabet", alphabet)

    def __setattr__(self, name, value):
        raise AttributeError("Language is immutable")

    @classmethod
    def _trusted(cls, ast: Node, alphabet: Alphabet) -> "Language":
        # ast is already a normal form over alphabet
        language = object.__new__(cls)
        object.__setattr__(language, "ast", ast)
        object.__setattr__(language, "alphabet", alphabet)
        return language

    def nullable(self) -> bool:
        return node_nullable(self.ast)

    def derivative(self, symbol: str) -> "Language":
        self.alphabet.index(symbol)
        return Language._trusted(node_derivative(self.ast, symbol), self.alphabet)

    def word_derivative(self, word: str) -> "Language":
        self.alphabet.check_word(word)
        return Language._trusted(node_word_derivative(self.ast, word), self.alphabet)

    def contains(self, word: str) -> bool:
        self.alphabet.check_word(word)
        return node_contains(self.ast, word)

    def _same_alphabet(self, other: "Language"):
        if self.alphabet != other.alphabet:
            raise AlphabetError(f"alphabets differ: {self.alphabet} vs {other.alphabet}")

    def union(self, other: "Language") -> "Language":
        self._same_alphabet(other)
        return Language._trusted(union(self.ast, other.ast), self.alphabet)

    def intersect(self, other: "Language") -> "Language":
        self._same_alphabet(other)
        return Language._trusted(intersect(self.ast, other.ast), self.alphabet)

    def complement(self) -> "Language":
        return Language._trusted(complement(self.ast), self.alphabet)

    def difference(self, other: "Language") -> "Language":
        return self.intersect(other.complement())

    def symmetric_difference(self, other: "Language") -> "Language":
        return self.difference(other).union(other.difference(self))

    __or__ = union
    __and__ = intersect

    def __invert__(self) -> "Language":
        return self.complement()

    def __eq__(self, other) -> bool:
        return isinstance(other, Language) and self.alphabet == other.alphabet and self.ast == other.ast

    def __hash__(self) -> int:
        return hash((self.ast, self.alphabet))

    def __lt__(self, other: "Language") -> bool:
        return self.ast < other.ast

    def __str__(self) -> str:
        return to_regex_string(self.ast)

    def __repr__(self) -> str:
        return f"Language({str(self)!r}, alphabet={str(self.alphabet)!r})"


def empty_language(alphabet: Alphabet) -> Language:
    return Language._trusted(EMPTY, alphabet)


def epsilon_language(alphabet: Alphabet) -> Language:
    return Language._trusted(EPSILON, alphabet)


def sigma_star(alphabet: Alphabet) -> Language:
    return Language._trusted(SIGMA_STAR, alphabet)


def nullable(language: Language) -> bool:
    """True iff the empty word belongs to the language"""
    return language.nullable()


def derivative(language: Language, symbol: str) -> Language:
    """Left quotient a⁻¹L"""
    return language.derivative(symbol)


def word_derivative(language: Language, word: str) -> Language:
    """Left quotient w⁻¹L, folding single-symbol derivatives left to right"""
    return language.word_derivative(word)


def contains(language: Language, word: str) -> bool:
    """Membership via nullable ∘ word_derivative"""
    return language.contains(word)
