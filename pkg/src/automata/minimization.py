"""
Minimal automata, built two independent ways, and the regularity test
"""
import sys
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Callable, Hashable, List, Optional

import numpy as np

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from language.alphabet import Alphabet
from language.equivalence import LanguageStateSpace
from language.regex import Language
from sigma_sets.orbits import LanguagePresentation, orbit, resolve_bound
from sigma_sets.sigma_set import SigmaSet, unique_names
from utils.helpers import setup_logging, timing_decorator

from .automaton import Automaton, PointedAutomaton, reachable_part

logger = setup_logging(__name__)


def _explore(start: Hashable, step: Callable[[Hashable, str], Hashable],
             accepting: Callable[[Hashable], bool], alphabet: Alphabet,
             describe: Callable[[Hashable], str] = str) -> PointedAutomaton:
    """Breadth-first materialization of the states reachable from start"""
    index = {start: 0}
    states: List[Hashable] = [start]
    rows: List[List[int]] = []
    cursor = 0
    while cursor < len(states):
        current = states[cursor]
        row = []
        for symbol in alphabet:
            nxt = step(current, symbol)
            if nxt not in index:
                index[nxt] = len(states)
                states.append(nxt)
            row.append(index[nxt])
        rows.append(row)
        cursor += 1
    carrier = SigmaSet(unique_names([describe(s) for s in states]),
                       np.array(rows, dtype=np.int64).reshape(len(states), len(alphabet)), alphabet)
    accept = frozenset(i for i, s in enumerate(states) if accepting(s))
    return PointedAutomaton(Automaton(carrier, accept), 0)


@timing_decorator
def minimal_automaton(language: Language) -> PointedAutomaton:
    """
    Minimal automaton of a language from its derivatives

    Derivatives are merged up to semantic equality, so each state is one
    Nerode class and is named by the regex of its representative. The
    start state (index 0) is the class of the language itself.
    """
    space = LanguageStateSpace(language.alphabet)
    result = _explore(
        space.canonical(language),
        lambda state, symbol: space.canonical(state.derivative(symbol)),
        Language.nullable,
        language.alphabet,
    )
    logger.debug(f"minimal automaton of {language}: {result.size} states")
    return result


def derivative_automaton(language: Language) -> PointedAutomaton:
    """Derivative automaton with structural state identity (no semantic merging)"""
    return _explore(language, Language.derivative, Language.nullable, language.alphabet)


def _refine(delta: np.ndarray, accept: np.ndarray) -> np.ndarray:
    """Coarsest partition respecting acceptance and transitions, as block labels"""
    _, block = np.unique(accept.astype(np.int64), return_inverse=True)
    block = block.reshape(-1)
    while True:
        signature = np.column_stack([block, block[delta]]) if delta.size else block[:, None]
        _, refined = np.unique(signature, axis=0, return_inverse=True)
        refined = refined.reshape(-1)
        if refined.max() == block.max():
            return refined
        block = refined


def minimize(pointed: PointedAutomaton) -> PointedAutomaton:
    """
    Moore partition refinement of the reachable part

    Blocks are renumbered in breadth-first order from the start and each
    block keeps the name of its first reachable member.
    """
    reachable = reachable_part(pointed)
    carrier = reachable.carrier
    block = _refine(carrier.delta, reachable.automaton.accept_mask())

    blocks = int(block.max()) + 1
    representative = np.full(blocks, -1, dtype=np.int64)
    for q in range(carrier.size - 1, -1, -1):
        representative[block[q]] = q
    delta = block[carrier.delta[representative]]
    names = [carrier.states[q] for q in representative]
    quotient = SigmaSet(names, delta, carrier.alphabet)
    accept = frozenset(int(block[q]) for q in reachable.accept)
    logger.debug(f"minimized {pointed.size} states to {blocks}")
    return reachable_part(PointedAutomaton(Automaton(quotient, accept), int(block[reachable.start])))


class RegularityStatus(Enum):
    REGULAR = "regular"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class RegularityResult:
    """Regular(minimal, nerode_class_count) or Unknown(bound_hit)"""
    status: RegularityStatus
    minimal: Optional[PointedAutomaton] = None
    nerode_class_count: Optional[int] = None
    bound_hit: Optional[int] = None

    @property
    def is_regular(self) -> bool:
        return self.status is RegularityStatus.REGULAR

    def __str__(self) -> str:
        if self.is_regular:
            return f"Regular({self.nerode_class_count} classes)"
        return f"Unknown(bound {self.bound_hit})"


def is_regular(presentation: LanguagePresentation, bound: Optional[int] = None) -> RegularityResult:
    """
    Regularity of a presented language, decided by its orbit

    Args:
        presentation: Lazy Σ-set state with an acceptance predicate
        bound: Orbit bound; defaults to ORBIT_CONFIG

    Returns:
        RegularityResult: Regular with the minimized orbit automaton when
        the orbit closes within bound, else Unknown(bound)
    """
    sigma = presentation.sigma_set
    explored = orbit(sigma, presentation.state, bound)
    if not explored.is_finite:
        logger.info(f"orbit of {sigma.describe(presentation.state)} exceeded bound; regularity unknown")
        return RegularityResult(RegularityStatus.UNKNOWN, bound_hit=resolve_bound(bound))

    automaton = _explore(sigma.canonical(presentation.state), sigma.step, presentation.accepting,
                         sigma.alphabet, sigma.describe)
    minimal = minimize(automaton)
    return RegularityResult(RegularityStatus.REGULAR, minimal=minimal, nerode_class_count=minimal.size)
