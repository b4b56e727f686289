"""
Semantic equality of languages by bisimulation up to derivatives
"""
import sys
import threading
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from scipy.cluster.hierarchy import DisjointSet

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from utils.config import ORBIT_CONFIG
from utils.errors import AlphabetError
from utils.helpers import setup_logging

from .alphabet import Alphabet
from .regex import Language, Node, node_contains, node_derivative, node_nullable

logger = setup_logging(__name__)


@dataclass(frozen=True)
class BisimulationResult:
    """Outcome of a bisimulation run; witness is a word in exactly one language"""
    equal: bool
    witness: Optional[str] = None
    pairs_explored: int = 0


def bisimulate_nodes(left: Node, right: Node, symbols: Tuple[str, ...]) -> BisimulationResult:
    """
    Hopcroft–Karp style bisimulation on normal-form trees

    Pairs already related by the union-find are not explored again; the run
    terminates because a normal form has finitely many derivatives.
    """
    related = DisjointSet([left, right])
    related.merge(left, right)
    pending = deque([(left, right, "")])
    explored = 0

    while pending:
        x, y, word = pending.popleft()
        explored += 1
        if node_nullable(x) != node_nullable(y):
            return BisimulationResult(False, word, explored)
        for symbol in symbols:
            dx = node_derivative(x, symbol)
            dy = node_derivative(y, symbol)
            related.add(dx)
            related.add(dy)
            if not related.connected(dx, dy):
                related.merge(dx, dy)
                pending.append((dx, dy, word + symbol))

    return BisimulationResult(True, None, explored)


def bisimulate(first: Language, second: Language) -> BisimulationResult:
    """Bisimulation run between two languages over the same alphabet"""
    if first.alphabet != second.alphabet:
        raise AlphabetError(f"alphabets differ: {first.alphabet} vs {second.alphabet}")
    result = bisimulate_nodes(first.ast, second.ast, first.alphabet.symbols)
    logger.debug(f"bisimulation {first} ~ {second}: {result.equal} after {result.pairs_explored} pairs")
    return result


def semantically_equal(first: Language, second: Language) -> bool:
    """True iff both languages denote the same set of words"""
    return bisimulate(first, second).equal


def semantic_difference_witness(first: Language, second: Language) -> Optional[str]:
    """A word in exactly one of the two languages, or None when they are equal"""
    return bisimulate(first, second).witness


class LanguageStateSpace:
    """
    Identity of Language states up to semantic equality

    Each state is bucketed by its membership signature on short words and
    compared by bisimulation only against representatives in its bucket.
    The first member of each class is its representative. Safe to share
    between threads.
    """

    def __init__(self, alphabet: Alphabet, signature_length: Optional[int] = None):
        self.alphabet = alphabet
        length = signature_length if signature_length is not None else ORBIT_CONFIG["signature_length"]
        self._sample_words: List[str] = list(alphabet.words(length))
        self._buckets: Dict[Tuple[bool, ...], List[Node]] = {}
        self._representative: Dict[Node, Node] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return sum(len(bucket) for bucket in self._buckets.values())

    def canonical_node(self, node: Node) -> Node:
        with self._lock:
            known = self._representative.get(node)
            if known is not None:
                return known
            signature = tuple(node_contains(node, w) for w in self._sample_words)
            bucket = self._buckets.setdefault(signature, [])
            for candidate in bucket:
                if bisimulate_nodes(node, candidate, self.alphabet.symbols).equal:
                    self._representative[node] = candidate
                    return candidate
            bucket.append(node)
            self._representative[node] = node
            return node

    def canonical(self, language: Language) -> Language:
        """Representative of the semantic class of a language"""
        if language.alphabet != self.alphabet:
            raise AlphabetError(f"alphabets differ: {language.alphabet} vs {self.alphabet}")
        node = self.canonical_node(language.ast)
        return language if node == language.ast else Language._trusted(node, self.alphabet)
