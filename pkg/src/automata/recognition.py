"""
Recognition: the unique map from an automaton's states to languages
"""
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import numpy as np

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from language.equivalence import semantic_difference_witness
from language.regex import EMPTY, EPSILON, Language, Literal, Node, concat, star, union
from sigma_sets.sigma_set import SigmaSet, StateRef
from utils.helpers import setup_logging

from .automaton import Automaton, PointedAutomaton, accept_subsets
from .minimization import minimize

logger = setup_logging(__name__)

_IN, _OUT = "in", "out"


def _live_states(pointed: PointedAutomaton) -> List[int]:
    """States from which some accepting state is reachable"""
    delta = pointed.carrier.delta
    live = np.zeros(pointed.size, dtype=bool)
    live[list(pointed.accept)] = True
    changed = True
    while changed:
        grown = live | live[delta].any(axis=1) if delta.size else live
        changed = bool((grown != live).any())
        live = grown
    return [int(q) for q in np.flatnonzero(live)]


def _eliminate(pointed: PointedAutomaton) -> Node:
    """State elimination on a minimized automaton, start state removed last"""
    carrier = pointed.carrier
    live = _live_states(pointed)
    if pointed.start not in live:
        return EMPTY

    edges: Dict[Tuple, Node] = {}

    def add(src, dst, node: Node):
        edges[(src, dst)] = union(edges.get((src, dst), EMPTY), node)

    add(_IN, pointed.start, EPSILON)
    live_set = set(live)
    for q in live:
        if q in pointed.accept:
            add(q, _OUT, EPSILON)
        for i, symbol in enumerate(carrier.alphabet):
            t = int(carrier.delta[q, i])
            if t in live_set:
                add(q, t, Literal(symbol))

    order = [q for q in reversed(live) if q != pointed.start] + [pointed.start]
    for k in order:
        loop = star(edges.pop((k, k), EMPTY))
        incoming = [(src, node) for (src, dst), node in edges.items() if dst == k]
        outgoing = [(dst, node) for (src, dst), node in edges.items() if src == k]
        for src, _ in incoming:
            del edges[(src, k)]
        for dst, _ in outgoing:
            del edges[(k, dst)]
        for src, into in incoming:
            for dst, out in outgoing:
                add(src, dst, concat(into, loop, out))
    return edges.get((_IN, _OUT), EMPTY)


def recognized_language_symbolic(automaton: Automaton, state: StateRef) -> Language:
    """
    The language L_q accepted from a state, solved to a regex

    The part reachable from q is minimized and its dead states dropped
    before elimination. The result is normalized but not necessarily the
    shortest expression.
    """
    pointed = minimize(PointedAutomaton(automaton, automaton.carrier.resolve(state)))
    return Language(_eliminate(pointed), automaton.alphabet)


def recognition_map(automaton: Automaton) -> List[Language]:
    """L_q for every state q, indexed like the carrier"""
    return [recognized_language_symbolic(automaton, q) for q in range(automaton.size)]


@dataclass(frozen=True)
class RecognitionViolation:
    """A failed coalgebra law: law is 'epsilon', 'derivative' or 'sample'"""
    law: str
    state: str
    symbol: Optional[str] = None
    word: Optional[str] = None


def recognition_law_violation(
    automaton: Automaton,
    samples: Iterable[str] = (),
    language_of: Callable[[Automaton], List[Language]] = recognition_map,
) -> Optional[RecognitionViolation]:
    """
    First violation of the laws of the map q ↦ L_q, or None

    Checks ε ∈ L_q ⇔ q ∈ F and a⁻¹L_q = L_{δ(q,a)} semantically, then run
    acceptance against L_q on each sample word. language_of replaces the
    engine that computes the family, so faults can be injected.
    """
    family = language_of(automaton)
    carrier = automaton.carrier
    samples = list(samples)
    for q, name in enumerate(carrier.states):
        if family[q].nullable() != (q in automaton.accept):
            return RecognitionViolation("epsilon", name)
        for i, symbol in enumerate(carrier.alphabet):
            witness = semantic_difference_witness(family[q].derivative(symbol), family[int(carrier.delta[q, i])])
            if witness is not None:
                return RecognitionViolation("derivative", name, symbol, witness)
        for word in samples:
            if family[q].contains(word) != automaton.accepts(q, word):
                return RecognitionViolation("sample", name, word=word)
    return None


def recognition_morphism_check(
    automaton: Automaton,
    samples: Iterable[str] = (),
    language_of: Callable[[Automaton], List[Language]] = recognition_map,
) -> bool:
    """True iff both coalgebra laws hold for all states, symbols and samples"""
    violation = recognition_law_violation(automaton, samples, language_of)
    if violation is not None:
        logger.info(f"recognition law violated: {violation}")
    return violation is None


def dfa_structures(carrier: SigmaSet) -> Iterator[Tuple[FrozenSet[int], List[Language]]]:
    """Every accepting subset F ⊆ Q with its recognition family"""
    for accept in accept_subsets(carrier):
        yield accept, recognition_map(Automaton(carrier, accept))
