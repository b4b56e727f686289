"""
Boolean operations, equivalence and isomorphism of pointed automata
"""
import sys
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from sigma_sets.sigma_set import product
from utils.errors import AlphabetError
from utils.helpers import setup_logging

from .automaton import Automaton, PointedAutomaton, reachable_part

logger = setup_logging(__name__)

BOOLEAN_OPS = {
    "union": lambda x, y: x or y,
    "intersect": lambda x, y: x and y,
}


@dataclass(frozen=True)
class EquivalenceResult:
    """Verdict of a language comparison; counterexample is the shortlex-least distinguishing word"""
    equivalent: bool
    counterexample: Optional[str] = None

    def __bool__(self) -> bool:
        return self.equivalent


def _check_alphabets(first: PointedAutomaton, second: PointedAutomaton):
    if first.alphabet != second.alphabet:
        raise AlphabetError(f"alphabets differ: {first.alphabet} vs {second.alphabet}")


def equivalent(first: PointedAutomaton, second: PointedAutomaton) -> EquivalenceResult:
    """
    Compare recognized languages by breadth-first search of the product

    Pairs are explored in shortlex order of their access words, so the
    first pair that disagrees on acceptance yields the shortlex-least
    distinguishing word.
    """
    _check_alphabets(first, second)
    symbols = first.alphabet.symbols
    d1, d2 = first.carrier.delta, second.carrier.delta
    start = (first.start, second.start)
    access = {start: ""}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if (p in first.accept) != (q in second.accept):
            return EquivalenceResult(False, access[(p, q)])
        for i, symbol in enumerate(symbols):
            pair = (int(d1[p, i]), int(d2[q, i]))
            if pair not in access:
                access[pair] = access[(p, q)] + symbol
                queue.append(pair)
    return EquivalenceResult(True)


def boolean_combine(first: PointedAutomaton, second: PointedAutomaton, op: str) -> PointedAutomaton:
    """
    Product automaton accepting by 'union' (either) or 'intersect' (both)

    Only the part reachable from the start pair is kept.
    """
    if op not in BOOLEAN_OPS:
        raise ValueError(f"unknown Boolean operation {op!r}; expected one of {sorted(BOOLEAN_OPS)}")
    _check_alphabets(first, second)
    combine = BOOLEAN_OPS[op]
    carrier = product(first.carrier, second.carrier)
    n2 = second.size
    accept = frozenset(
        i * n2 + j
        for i in range(first.size)
        for j in range(n2)
        if combine(i in first.accept, j in second.accept)
    )
    return reachable_part(PointedAutomaton(Automaton(carrier, accept), first.start * n2 + second.start))


def complement(pointed: PointedAutomaton) -> PointedAutomaton:
    """Flip the accepting set"""
    flipped = frozenset(range(pointed.size)) - pointed.accept
    return PointedAutomaton(Automaton(pointed.carrier, flipped), pointed.start)


def isomorphic(first: PointedAutomaton, second: PointedAutomaton) -> bool:
    """
    True iff the reachable parts are isomorphic as pointed automata

    For reachable automata an isomorphism is unique if it exists, so one
    synchronized traversal from the starts decides it. Compare minimized
    automata to decide language equality up to isomorphism.
    """
    if first.alphabet != second.alphabet:
        return False
    first, second = reachable_part(first), reachable_part(second)
    if first.size != second.size:
        return False
    forward = {0: 0}
    backward = {0: 0}
    queue = deque([(0, 0)])
    while queue:
        p, q = queue.popleft()
        if (p in first.accept) != (q in second.accept):
            return False
        for i in range(len(first.alphabet)):
            tp, tq = int(first.carrier.delta[p, i]), int(second.carrier.delta[q, i])
            mapped = forward.get(tp)
            if mapped is None:
                if tq in backward:
                    return False
                forward[tp] = tq
                backward[tq] = tp
                queue.append((tp, tq))
            elif mapped != tq:
                return False
    return True
