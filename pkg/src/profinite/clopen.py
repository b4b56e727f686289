"""
Clopen recognizers: subsets of a finite quotient node, their pullback to
languages, the ∼_S classes and separation of languages
"""
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import FrozenSet, List, Optional

import numpy as np

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from automata.automaton import Automaton, shortest_accepted_word
from automata.recognition import recognized_language_symbolic
from language.equivalence import semantically_equal
from language.regex import Language
from monoids.monoid import FiniteMonoid, MonoidRecognizer, SigmaMonoid, as_sigma_set
from monoids.transition import recognizer_automaton, syntactic_monoid
from utils.errors import MorphismError
from utils.helpers import setup_logging

from .system import join_nodes

logger = setup_logging(__name__)


@dataclass(frozen=True)
class ClopenRecognizer:
    """A node with a subset S; the clopen of profinite words landing in S"""
    node: SigmaMonoid
    subset: FrozenSet[int]

    def __post_init__(self):
        subset = frozenset(int(m) for m in self.subset)
        if any(not 0 <= m < self.node.size for m in subset):
            raise MorphismError("clopen subset element out of range")
        object.__setattr__(self, "subset", subset)

    @classmethod
    def from_recognizer(cls, recognizer: MonoidRecognizer) -> "ClopenRecognizer":
        return cls(recognizer.sigma_monoid, recognizer.accepting)

    def as_recognizer(self) -> MonoidRecognizer:
        return MonoidRecognizer(self.node, self.subset)

    def contains_word(self, word: str) -> bool:
        return self.node.hom(word) in self.subset


def clopen_pullback(clopen: ClopenRecognizer) -> Language:
    """The regular language {w | hom(w) ∈ S}"""
    automaton = Automaton(as_sigma_set(clopen.node), clopen.subset)
    return recognized_language_symbolic(automaton, clopen.node.monoid.identity)


def sim_classes(monoid: FiniteMonoid, subset) -> List[List[int]]:
    """
    Partition of M by a ∼_S b ⇔ a⁻¹S = b⁻¹S, where a⁻¹S = {m | a·m ∈ S}

    Classes are ordered by their smallest element.
    """
    member = np.zeros(monoid.size, dtype=bool)
    member[list(subset)] = True
    quotients = member[monoid.table]  # row a is the indicator of a⁻¹S
    _, label = np.unique(quotients, axis=0, return_inverse=True)
    label = label.reshape(-1)
    classes = {}
    for a in range(monoid.size):
        classes.setdefault(int(label[a]), []).append(a)
    return sorted(classes.values(), key=lambda block: block[0])


def _common_node(first: ClopenRecognizer, second: ClopenRecognizer):
    """Both clopens as subsets of one node, joining the nodes when they differ"""
    if first.node == second.node:
        return first.node, first.subset, second.subset
    joined, left, right = join_nodes(first.node, second.node)
    s1 = frozenset(x for x, image in enumerate(left.mapping) if image in first.subset)
    s2 = frozenset(x for x, image in enumerate(right.mapping) if image in second.subset)
    return joined, s1, s2


def clopen_union(first: ClopenRecognizer, second: ClopenRecognizer) -> ClopenRecognizer:
    node, s1, s2 = _common_node(first, second)
    return ClopenRecognizer(node, s1 | s2)


def clopen_intersection(first: ClopenRecognizer, second: ClopenRecognizer) -> ClopenRecognizer:
    node, s1, s2 = _common_node(first, second)
    return ClopenRecognizer(node, s1 & s2)


def clopen_complement(clopen: ClopenRecognizer) -> ClopenRecognizer:
    return ClopenRecognizer(clopen.node, frozenset(range(clopen.node.size)) - clopen.subset)


@dataclass(frozen=True)
class SeparationResult:
    """A separating clopen with a witness word, or neither when the languages are equal"""
    clopen: Optional[ClopenRecognizer] = None
    witness: Optional[str] = None

    @property
    def equal(self) -> bool:
        return self.clopen is None


def separate(first: Language, second: Language) -> SeparationResult:
    """
    A clopen containing exactly the words in one language but not the other

    Built from the syntactic monoid of the symmetric difference; its
    shortlex-least word is reported as the witness.
    """
    if semantically_equal(first, second):
        return SeparationResult()
    recognizer = syntactic_monoid(first.symmetric_difference(second))
    witness = shortest_accepted_word(recognizer_automaton(recognizer))
    logger.debug(f"separated {first} and {second} by {witness!r}")
    return SeparationResult(ClopenRecognizer.from_recognizer(recognizer), witness)
