"""
Transition monoids, the covering morphism, syntactic monoids and
recognition by monoids
"""
import sys
from pathlib import Path
from typing import Dict, List

import numpy as np

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from automata.automaton import Automaton, PointedAutomaton
from automata.minimization import minimal_automaton
from automata.operations import EquivalenceResult, equivalent
from language.regex import Language
from sigma_sets.sigma_set import SigmaSet, SigmaSetMorphism, StateRef
from utils.errors import AlphabetError
from utils.helpers import EPSILON_DISPLAY, setup_logging, timing_decorator

from .monoid import FiniteMonoid, MonoidRecognizer, SigmaMonoid, as_sigma_set

logger = setup_logging(__name__)


@timing_decorator
def transition_monoid(sigma_set: SigmaSet) -> SigmaMonoid:
    """
    Submonoid of End(Q)^op generated by the maps δ(−, a)

    Multiplication is diagrammatic, φ·ψ = ψ ∘ φ, so hom(uv) = hom(u)·hom(v).
    Elements are discovered breadth-first from the identity with symbols
    in alphabet order; each is named by its shortlex-least word.
    """
    n = sigma_set.size
    alphabet = sigma_set.alphabet
    identity = np.arange(n, dtype=np.int64)
    maps: List[np.ndarray] = [identity]
    names: List[str] = [EPSILON_DISPLAY]
    index: Dict[bytes, int] = {identity.tobytes(): 0}
    successors: List[List[int]] = []

    cursor = 0
    while cursor < len(maps):
        phi = maps[cursor]
        row = []
        for i, symbol in enumerate(alphabet):
            composite = sigma_set.delta[phi, i]
            key = composite.tobytes()
            if key not in index:
                index[key] = len(maps)
                maps.append(composite)
                names.append((names[cursor] if cursor else "") + symbol)
            row.append(index[key])
        successors.append(row)
        cursor += 1

    functions = np.array(maps, dtype=np.int64).reshape(len(maps), n)
    size = len(maps)
    table = np.zeros((size, size), dtype=np.int64)
    for i in range(size):
        # (φ_i · φ_j)(q) = φ_j(φ_i(q))
        composed = functions[:, functions[i]]
        table[i] = [index[row.tobytes()] for row in composed]

    generators = {a: successors[0][i] for i, a in enumerate(alphabet)}
    logger.debug(f"transition monoid of a {n}-state Σ-set has {size} elements")
    return SigmaMonoid(FiniteMonoid(table, 0, names), generators, alphabet,
                       tuple(tuple(int(x) for x in f) for f in functions))


def covering_morphism(sigma_set: SigmaSet, start: StateRef) -> SigmaSetMorphism:
    """The equivariant map φ ↦ φ(q₀) from the transition monoid onto the orbit of q₀"""
    q0 = sigma_set.resolve(start)
    sigma_monoid = transition_monoid(sigma_set)
    mapping = tuple(phi[q0] for phi in sigma_monoid.transformations)
    return SigmaSetMorphism(as_sigma_set(sigma_monoid), sigma_set, mapping)


def recognizer_automaton(recognizer: MonoidRecognizer) -> PointedAutomaton:
    """The automaton (M, right multiplication) started at e and accepting S"""
    carrier = as_sigma_set(recognizer.sigma_monoid)
    return PointedAutomaton(Automaton(carrier, recognizer.accepting), recognizer.monoid.identity)


def monoid_recognizes(recognizer: MonoidRecognizer, language: Language) -> EquivalenceResult:
    """Decide hom⁻¹(S) = L by automaton equivalence against the minimal automaton of L"""
    if recognizer.alphabet != language.alphabet:
        raise AlphabetError(f"alphabets differ: {recognizer.alphabet} vs {language.alphabet}")
    return equivalent(recognizer_automaton(recognizer), minimal_automaton(language))


def syntactic_recognizer(pointed: PointedAutomaton) -> MonoidRecognizer:
    """Transition monoid of an automaton with S = {m | m(q₀) ∈ F}"""
    sigma_monoid = transition_monoid(pointed.carrier)
    accepting = frozenset(
        m for m, phi in enumerate(sigma_monoid.transformations) if phi[pointed.start] in pointed.accept
    )
    return MonoidRecognizer(sigma_monoid, accepting)


def syntactic_monoid(language: Language) -> MonoidRecognizer:
    """
    Syntactic monoid of a regular language

    Realized as the transition monoid of the minimal automaton, accepting
    the elements that send the start state into an accepting state.
    """
    return syntactic_recognizer(minimal_automaton(language))
