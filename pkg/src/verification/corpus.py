"""
Seeded random inputs and a brute-force membership oracle
"""
import functools
import sys
from pathlib import Path
from typing import FrozenSet, List, Optional, Sequence

import numpy as np

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from language.alphabet import Alphabet
from language.regex import (
    EMPTY, EPSILON, Complement, Concat, Empty, Epsilon, Intersect, Language, Literal, Node, Star, Union,
    complement, concat, intersect, star, union,
)
from sigma_sets.sigma_set import SigmaSet
from utils.config import VERIFICATION_CONFIG

_OPERATORS = ("concat", "union", "intersect", "complement", "star")
_OPERATOR_WEIGHTS = np.array([0.35, 0.25, 0.1, 0.1, 0.2])


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(VERIFICATION_CONFIG["seed"] if seed is None else seed)


def random_node(rng: np.random.Generator, symbols: Sequence[str], depth: int) -> Node:
    """Random normal-form tree of height at most depth"""
    if depth <= 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.05:
            return EMPTY
        if roll < 0.15 or not symbols:
            return EPSILON
        return Literal(symbols[int(rng.integers(len(symbols)))])
    op = _OPERATORS[int(rng.choice(len(_OPERATORS), p=_OPERATOR_WEIGHTS))]
    if op == "complement":
        return complement(random_node(rng, symbols, depth - 1))
    if op == "star":
        return star(random_node(rng, symbols, depth - 1))
    left = random_node(rng, symbols, depth - 1)
    right = random_node(rng, symbols, depth - 1)
    return {"concat": concat, "union": union, "intersect": intersect}[op](left, right)


def random_corpus(size: int, alphabet: Alphabet, max_depth: Optional[int] = None,
                  seed: Optional[int] = None) -> List[Language]:
    """size random languages over one alphabet; identical seeds give identical corpora"""
    rng = make_rng(seed)
    depth = VERIFICATION_CONFIG["max_depth"] if max_depth is None else max_depth
    return [Language(random_node(rng, alphabet.symbols, depth), alphabet) for _ in range(size)]


def mixed_alphabet_corpus(size: int, max_symbols: int = 3, max_depth: Optional[int] = None,
                          seed: Optional[int] = None) -> List[Language]:
    """Random languages over alphabets of 1 to max_symbols symbols"""
    rng = make_rng(seed)
    depth = VERIFICATION_CONFIG["max_depth"] if max_depth is None else max_depth
    alphabets = [Alphabet("abc"[:k]) for k in range(1, max_symbols + 1)]
    corpus = []
    for _ in range(size):
        alphabet = alphabets[int(rng.integers(len(alphabets)))]
        corpus.append(Language(random_node(rng, alphabet.symbols, depth), alphabet))
    return corpus


def random_sigma_set(rng: np.random.Generator, alphabet: Alphabet, max_states: int) -> SigmaSet:
    n = int(rng.integers(1, max_states + 1))
    delta = rng.integers(0, n, size=(n, len(alphabet)))
    return SigmaSet([f"q{i}" for i in range(n)], delta, alphabet)


def brute_force_contains(node: Node, word: str) -> bool:
    """
    Membership by splitting the word, never using derivatives

    Concatenation and star try every split point; complement and
    intersection are read off the set semantics directly.
    """
    @functools.lru_cache(maxsize=None)
    def member(current: Node, i: int, j: int) -> bool:
        if isinstance(current, Empty):
            return False
        if isinstance(current, Epsilon):
            return i == j
        if isinstance(current, Literal):
            return j == i + 1 and word[i] == current.symbol
        if isinstance(current, Concat):
            head, rest = current.children[0], concat(*current.children[1:])
            return any(member(head, i, k) and member(rest, k, j) for k in range(i, j + 1))
        if isinstance(current, Union):
            return any(member(c, i, j) for c in current.children)
        if isinstance(current, Intersect):
            return all(member(c, i, j) for c in current.children)
        if isinstance(current, Complement):
            return not member(current.child, i, j)
        if isinstance(current, Star):
            return i == j or any(
                member(current.child, i, k) and member(current, k, j) for k in range(i + 1, j + 1)
            )
        raise TypeError(f"unknown expression node {current!r}")

    return member(node, 0, len(word))


def brute_force_set(language: Language, max_length: int) -> FrozenSet[str]:
    """All words up to max_length in the language, by the brute-force oracle"""
    return frozenset(w for w in language.alphabet.words(max_length) if brute_force_contains(language.ast, w))
