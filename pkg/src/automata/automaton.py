"""
Deterministic automata as Σ-sets with an accepting subset
"""
import sys
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import FrozenSet, Iterable, Iterator, Optional

import numpy as np

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from language.alphabet import Alphabet
from sigma_sets.sigma_set import SigmaSet, SigmaSetMorphism, StateRef
from utils.errors import TransitionTableError


@dataclass(frozen=True)
class Automaton:
    """A Σ-set (Q, δ) with accepting states F ⊆ Q, held as indices"""
    carrier: SigmaSet
    accept: FrozenSet[int]

    def __post_init__(self):
        accept = frozenset(int(q) for q in self.accept)
        bad = [q for q in accept if not 0 <= q < self.carrier.size]
        if bad:
            raise TransitionTableError(f"accepting state index {bad[0]} out of range", bad[0])
        object.__setattr__(self, "accept", accept)

    @property
    def alphabet(self) -> Alphabet:
        return self.carrier.alphabet

    @property
    def size(self) -> int:
        return self.carrier.size

    def is_accepting(self, state: StateRef) -> bool:
        return self.carrier.resolve(state) in self.accept

    def accept_mask(self) -> np.ndarray:
        mask = np.zeros(self.size, dtype=bool)
        mask[list(self.accept)] = True
        return mask

    def accepts(self, state: StateRef, word: str) -> bool:
        return self.carrier.run(state, word) in self.accept

    def accepting_names(self):
        return [self.carrier.states[q] for q in sorted(self.accept)]


@dataclass(frozen=True)
class PointedAutomaton:
    """An automaton with a chosen start state"""
    automaton: Automaton
    start: int

    def __post_init__(self):
        object.__setattr__(self, "start", self.automaton.carrier.resolve(self.start))

    @property
    def carrier(self) -> SigmaSet:
        return self.automaton.carrier

    @property
    def accept(self) -> FrozenSet[int]:
        return self.automaton.accept

    @property
    def alphabet(self) -> Alphabet:
        return self.automaton.alphabet

    @property
    def size(self) -> int:
        return self.automaton.size

    def accepts(self, word: str) -> bool:
        return self.automaton.accepts(self.start, word)


def make_automaton(carrier: SigmaSet, accept: Iterable[StateRef]) -> Automaton:
    """Automaton from a Σ-set and accepting states given by name or index"""
    return Automaton(carrier, frozenset(carrier.resolve(q) for q in accept))


def point(automaton: Automaton, start: StateRef) -> PointedAutomaton:
    return PointedAutomaton(automaton, automaton.carrier.resolve(start))


def recognized_language(automaton: Automaton, state: StateRef, word: str) -> bool:
    """True iff the run from state on word ends in an accepting state"""
    return automaton.accepts(state, word)


def reachable_part(pointed: PointedAutomaton) -> PointedAutomaton:
    """
    Restriction to the states reachable from the start

    States are renumbered in breadth-first discovery order (symbols in
    alphabet order), so the start becomes index 0.
    """
    carrier = pointed.carrier
    order = {pointed.start: 0}
    queue = deque([pointed.start])
    while queue:
        q = queue.popleft()
        for t in carrier.delta[q]:
            t = int(t)
            if t not in order:
                order[t] = len(order)
                queue.append(t)
    kept = list(order)
    delta = np.array([[order[int(t)] for t in carrier.delta[q]] for q in kept], dtype=np.int64)
    sub = SigmaSet([carrier.states[q] for q in kept], delta.reshape(len(kept), len(carrier.alphabet)),
                   carrier.alphabet)
    accept = frozenset(order[q] for q in pointed.accept if q in order)
    return PointedAutomaton(Automaton(sub, accept), 0)


def shortest_accepted_word(pointed: PointedAutomaton) -> Optional[str]:
    """Shortlex-least accepted word, or None when the language is empty"""
    carrier = pointed.carrier
    symbols = carrier.alphabet.symbols
    access = {pointed.start: ""}
    queue = deque([pointed.start])
    while queue:
        q = queue.popleft()
        if q in pointed.accept:
            return access[q]
        for i, symbol in enumerate(symbols):
            t = int(carrier.delta[q, i])
            if t not in access:
                access[t] = access[q] + symbol
                queue.append(t)
    return None


def restrict_accept(morphism: SigmaSetMorphism, accept: Iterable[StateRef]) -> Automaton:
    """Pull an accepting subset of the target back along a Σ-set morphism"""
    target_accept = {morphism.target.resolve(q) for q in accept}
    return Automaton(morphism.source,
                     frozenset(q for q, image in enumerate(morphism.mapping) if image in target_accept))


def accept_subsets(carrier: SigmaSet) -> Iterator[FrozenSet[int]]:
    """Every F ⊆ Q, smallest first"""
    for size in range(carrier.size + 1):
        for subset in combinations(range(carrier.size), size):
            yield frozenset(subset)
