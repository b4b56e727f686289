"""
Lazily presented Σ-sets, bounded orbit exploration and the maximal
orbit-finite part
"""
import sys
from collections import deque
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Hashable, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from language.alphabet import Alphabet
from language.equivalence import LanguageStateSpace
from language.regex import Language
from utils.config import ORBIT_CONFIG
from utils.helpers import setup_logging

from .sigma_set import SigmaSet, SigmaSetMorphism, unique_names

logger = setup_logging(__name__)


class LazySigmaSet:
    """
    A Σ-set given by a step function over hashable states

    Args:
        alphabet: The alphabet Σ
        step: Deterministic total function (state, symbol) -> state
        seeds: States of interest, explored by maximal_orbit_finite_part
        canonical: Maps a state to the representative of its identity class;
            applied to seeds and to every start state of an orbit run
        describe: State naming used when a finite part is materialized
    """

    def __init__(self, alphabet: Alphabet, step: Callable[[Hashable, str], Hashable],
                 seeds: Sequence[Hashable] = (), canonical: Optional[Callable[[Hashable], Hashable]] = None,
                 describe: Callable[[Hashable], str] = str):
        self.alphabet = alphabet
        self._step = step
        self._canonical = canonical or (lambda state: state)
        self.describe = describe
        self.seeds = tuple(self._canonical(s) for s in seeds)

    def canonical(self, state: Hashable) -> Hashable:
        return self._canonical(state)

    def step(self, state: Hashable, symbol: str) -> Hashable:
        return self._step(state, symbol)

    def with_seeds(self, seeds: Sequence[Hashable]) -> "LazySigmaSet":
        return LazySigmaSet(self.alphabet, self._step, seeds, self._canonical, self.describe)


class OrbitStatus(Enum):
    FINITE = "finite"
    EXCEEDED_BOUND = "exceeded_bound"


@dataclass(frozen=True)
class OrbitResult:
    """Finite(states) or ExceededBound(visited)"""
    status: OrbitStatus
    states: Tuple[Any, ...] = ()
    visited: int = 0

    @property
    def is_finite(self) -> bool:
        return self.status is OrbitStatus.FINITE

    @property
    def size(self) -> int:
        return len(self.states) if self.is_finite else self.visited

    def __str__(self) -> str:
        if self.is_finite:
            return f"Finite({len(self.states)})"
        return f"ExceededBound({self.visited})"


def resolve_bound(bound: Optional[int]) -> int:
    bound = ORBIT_CONFIG["bound"] if bound is None else bound
    if bound < 1:
        raise ValueError(f"bound must be at least 1, got {bound}")
    return bound


def orbit(sigma_set: Union[SigmaSet, LazySigmaSet], state, bound: Optional[int] = None) -> OrbitResult:
    """
    Breadth-first closure of {q} under all symbol actions

    Args:
        sigma_set: A finite or lazily presented Σ-set
        state: Start state (index or name for finite Σ-sets)
        bound: Largest orbit accepted as Finite; defaults to ORBIT_CONFIG

    Returns:
        OrbitResult: Finite with the orbit in discovery order (state names for
        finite Σ-sets), or ExceededBound with the number of states visited
    """
    bound = resolve_bound(bound)
    if isinstance(sigma_set, SigmaSet):
        start = sigma_set.resolve(state)
        step = sigma_set.step
    else:
        start = sigma_set.canonical(state)
        step = sigma_set.step

    seen = {start: None}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for symbol in sigma_set.alphabet:
            nxt = step(current, symbol)
            if nxt in seen:
                continue
            seen[nxt] = None
            if len(seen) > bound:
                logger.debug(f"orbit exceeded bound {bound}")
                return OrbitResult(OrbitStatus.EXCEEDED_BOUND, visited=len(seen))
            queue.append(nxt)

    states = tuple(seen)
    if isinstance(sigma_set, SigmaSet):
        states = tuple(sigma_set.states[q] for q in states)
    return OrbitResult(OrbitStatus.FINITE, states=states)


def is_orbit_finite(sigma_set: Union[SigmaSet, LazySigmaSet], bound: Optional[int] = None) -> bool:
    """True iff every state (every seed, for lazy Σ-sets) has a Finite orbit within bound"""
    starts = range(sigma_set.size) if isinstance(sigma_set, SigmaSet) else sigma_set.seeds
    return all(orbit(sigma_set, q, bound).is_finite for q in starts)


def maximal_orbit_finite_part(sigma_set: Union[SigmaSet, LazySigmaSet],
                              bound: Optional[int] = None) -> SigmaSet:
    """
    The sub-Σ-set of states whose orbits are Finite within bound

    For a finite Σ-set every state is a candidate; for a lazy one only its
    seeds are. The result lists states in discovery order and is closed
    under the action.
    """
    bound = resolve_bound(bound)
    if isinstance(sigma_set, SigmaSet):
        keep = [q for q in range(sigma_set.size) if orbit(sigma_set, q, bound).is_finite]
        position = {q: i for i, q in enumerate(keep)}
        delta = np.array([[position[int(t)] for t in sigma_set.delta[q]] for q in keep], dtype=np.int64)
        return SigmaSet([sigma_set.states[q] for q in keep], delta.reshape(len(keep), len(sigma_set.alphabet)),
                        sigma_set.alphabet)

    found = {}
    for seed in sigma_set.seeds:
        result = orbit(sigma_set, seed, bound)
        if not result.is_finite:
            logger.info(f"seed {sigma_set.describe(seed)} left out: {result}")
            continue
        for state in result.states:
            found.setdefault(state, len(found))
    states = list(found)
    delta = np.array([[found[sigma_set.step(s, a)] for a in sigma_set.alphabet] for s in states], dtype=np.int64)
    names = unique_names([sigma_set.describe(s) for s in states])
    return SigmaSet(names, delta.reshape(len(states), len(sigma_set.alphabet)), sigma_set.alphabet)


def inclusion_morphism(part: SigmaSet, whole: SigmaSet) -> SigmaSetMorphism:
    """Inclusion of a sub-Σ-set into a finite Σ-set, matched by state name"""
    return SigmaSetMorphism(part, whole, tuple(whole.resolve(name) for name in part.states))


# --- language presentations ---------------------------------------------------

@dataclass(frozen=True)
class LanguagePresentation:
    """A state of a lazy Σ-set together with the acceptance predicate"""
    sigma_set: LazySigmaSet
    state: Hashable
    accepting: Callable[[Hashable], bool]

    def contains(self, word: str) -> bool:
        state = self.sigma_set.canonical(self.state)
        for symbol in self.sigma_set.alphabet.check_word(word):
            state = self.sigma_set.step(state, symbol)
        return bool(self.accepting(state))


def derivative_sigma_set(alphabet: Alphabet, seeds: Sequence[Language] = (),
                         space: Optional[LanguageStateSpace] = None) -> LazySigmaSet:
    """
    Languages under the derivative action, identified up to semantic equality
    """
    space = space or LanguageStateSpace(alphabet)
    return LazySigmaSet(
        alphabet,
        step=lambda language, symbol: space.canonical(language.derivative(symbol)),
        seeds=seeds,
        canonical=space.canonical,
        describe=str,
    )


def language_presentation(language: Language) -> LanguagePresentation:
    """The derivative presentation of a regex language"""
    sigma = derivative_sigma_set(language.alphabet, [language])
    return LanguagePresentation(sigma, language, lambda state: state.nullable())


class CounterState(NamedTuple):
    """Counter for {aⁿbⁿ}: reading a's (up), reading b's (down), or dead"""
    phase: str
    count: int

    def __str__(self) -> str:
        return "dead" if self.phase == "dead" else f"{self.phase}{self.count}"


DEAD = CounterState("dead", 0)


def counter_step(state: CounterState, symbol: str) -> CounterState:
    if state.phase == "up":
        if symbol == "a":
            return CounterState("up", state.count + 1)
        return CounterState("down", state.count - 1) if state.count > 0 else DEAD
    if state.phase == "down":
        if symbol == "b" and state.count > 0:
            return CounterState("down", state.count - 1)
        return DEAD
    return DEAD


def counter_presentation() -> LanguagePresentation:
    """
    The non-regular language {aⁿbⁿ | n ≥ 0} over {a, b} as a counter machine

    States up_n have read aⁿ; down_n still owe n b's. Distinct up_n states
    accept distinct words bⁿ, so the orbit of up_0 is infinite.
    """
    alphabet = Alphabet("ab")
    sigma = LazySigmaSet(alphabet, counter_step, seeds=[CounterState("up", 0)])
    return LanguagePresentation(sigma, CounterState("up", 0),
                                lambda state: state.phase != "dead" and state.count == 0)
