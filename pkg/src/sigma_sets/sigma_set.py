"""
Finite Σ-sets (word actions), their morphisms and constructions
"""
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from language.alphabet import Alphabet
from utils.errors import CongruenceError, MorphismError, TransitionTableError
from utils.helpers import setup_logging

logger = setup_logging(__name__)

StateRef = Union[int, str]


class SigmaSet:
    """
    A finite set of named states with a total transition table

    delta[q, i] is the index of the state reached from q on the i-th symbol
    of the alphabet. The table is read-only.
    """

    def __init__(self, states: Sequence[str], delta, alphabet: Alphabet):
        states = tuple(str(s) for s in states)
        table = np.array(delta, dtype=np.int64).reshape(len(states), len(alphabet))
        if len(set(states)) != len(states):
            raise TransitionTableError("state names must be unique")
        if table.size and (table.min() < 0 or table.max() >= len(states)):
            bad_q, bad_a = map(int, np.argwhere((table < 0) | (table >= len(states)))[0])
            raise TransitionTableError(
                f"transition ({states[bad_q]}, {alphabet.symbols[bad_a]}) leads to a missing state",
                states[bad_q], alphabet.symbols[bad_a],
            )
        table.setflags(write=False)
        self.states = states
        self.delta = table
        self.alphabet = alphabet
        self._index = {name: i for i, name in enumerate(states)}

    @property
    def size(self) -> int:
        return len(self.states)

    def __len__(self) -> int:
        return len(self.states)

    def resolve(self, state: StateRef) -> int:
        """Index of a state given by index or by name"""
        if isinstance(state, (int, np.integer)) and not isinstance(state, bool):
            if not 0 <= state < self.size:
                raise TransitionTableError(f"state index {state} out of range", state)
            return int(state)
        try:
            return self._index[str(state)]
        except KeyError:
            raise TransitionTableError(f"unknown state {state!r}", state) from None

    def step(self, state: int, symbol: str) -> int:
        return int(self.delta[state, self.alphabet.index(symbol)])

    def run(self, state: StateRef, word: str) -> int:
        """Index of q·w"""
        q = self.resolve(state)
        for symbol in self.alphabet.check_word(word):
            q = int(self.delta[q, self.alphabet.index(symbol)])
        return q

    def table(self) -> Dict[str, Dict[str, str]]:
        return {
            name: {a: self.states[self.delta[q, i]] for i, a in enumerate(self.alphabet)}
            for q, name in enumerate(self.states)
        }

    def symbol_map(self, symbol: str) -> np.ndarray:
        """The endofunction δ(−, a) as an index array"""
        return self.delta[:, self.alphabet.index(symbol)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, SigmaSet) and self.states == other.states
                and self.alphabet == other.alphabet and np.array_equal(self.delta, other.delta))

    def __hash__(self) -> int:
        return hash((self.states, self.alphabet, self.delta.tobytes()))

    def __repr__(self) -> str:
        return f"SigmaSet(states={list(self.states)!r}, alphabet={str(self.alphabet)!r})"


def make_sigma_set(states: Sequence[str], table: Mapping[str, Mapping[str, str]],
                   alphabet: Alphabet) -> SigmaSet:
    """
    Build a validated Σ-set from a nested transition dictionary

    Args:
        states: State names in their canonical order
        table: table[state][symbol] = target state name
        alphabet: The alphabet Σ

    Returns:
        SigmaSet: validated Σ-set

    Raises:
        TransitionTableError: a missing (state, symbol) entry or a dangling target
    """
    states = [str(s) for s in states]
    index = {name: i for i, name in enumerate(states)}
    delta = np.zeros((len(states), len(alphabet)), dtype=np.int64)
    for q, name in enumerate(states):
        row = table.get(name)
        for i, symbol in enumerate(alphabet):
            if row is None or symbol not in row:
                raise TransitionTableError(f"missing transition for ({name}, {symbol})", name, symbol)
            target = str(row[symbol])
            if target not in index:
                raise TransitionTableError(
                    f"transition ({name}, {symbol}) leads to unknown state {target!r}", name, symbol
                )
            delta[q, i] = index[target]
    return SigmaSet(states, delta, alphabet)


def sigma_set_from_function(states: Sequence[Any], step: Callable[[Any, str], Any],
                            alphabet: Alphabet) -> SigmaSet:
    """Tabulate a transition function on an explicit finite state list"""
    states = list(states)
    index = {s: i for i, s in enumerate(states)}
    delta = np.zeros((len(states), len(alphabet)), dtype=np.int64)
    for q, state in enumerate(states):
        for i, symbol in enumerate(alphabet):
            target = step(state, symbol)
            if target not in index:
                raise TransitionTableError(f"transition ({state}, {symbol}) leaves the state list", state, symbol)
            delta[q, i] = index[target]
    return SigmaSet([str(s) for s in states], delta, alphabet)


def terminal_sigma_set(alphabet: Alphabet, name: str = "*") -> SigmaSet:
    """The one-state Σ-set with all self-loops"""
    return SigmaSet([name], np.zeros((1, len(alphabet)), dtype=np.int64), alphabet)


# --- morphisms ----------------------------------------------------------------

@dataclass(frozen=True)
class SigmaSetMorphism:
    """A function on state indices from source to target"""
    source: SigmaSet
    target: SigmaSet
    mapping: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(int(x) for x in self.mapping))
        if self.source.alphabet != self.target.alphabet:
            raise MorphismError("source and target have different alphabets")
        if len(self.mapping) != self.source.size:
            raise MorphismError(f"mapping has {len(self.mapping)} entries for {self.source.size} states")
        if any(not 0 <= x < self.target.size for x in self.mapping):
            raise MorphismError("mapping points outside the target")

    def __call__(self, state: StateRef) -> int:
        return self.mapping[self.source.resolve(state)]

    def as_array(self) -> np.ndarray:
        return np.array(self.mapping, dtype=np.int64)

    def image(self) -> List[int]:
        return sorted(set(self.mapping))

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size


def equivariance_violation(morphism: SigmaSetMorphism) -> Optional[Tuple[str, str]]:
    """First (state, symbol) where f(δ(q,a)) ≠ δ'(f(q),a), or None"""
    f = morphism.as_array()
    if f.size == 0:
        return None
    lhs = f[morphism.source.delta]
    rhs = morphism.target.delta[f]
    bad = np.argwhere(lhs != rhs)
    if bad.size == 0:
        return None
    q, i = map(int, bad[0])
    return morphism.source.states[q], morphism.source.alphabet.symbols[i]


def check_morphism(morphism: SigmaSetMorphism) -> bool:
    """True iff the equivariance square commutes for every state and symbol"""
    return equivariance_violation(morphism) is None


def identity_morphism(sigma_set: SigmaSet) -> SigmaSetMorphism:
    return SigmaSetMorphism(sigma_set, sigma_set, tuple(range(sigma_set.size)))


def compose(first: SigmaSetMorphism, second: SigmaSetMorphism) -> SigmaSetMorphism:
    """second ∘ first"""
    if first.target != second.source:
        raise MorphismError("morphisms are not composable")
    return SigmaSetMorphism(first.source, second.target, tuple(second.mapping[x] for x in first.mapping))


# --- products and coproducts --------------------------------------------------

def _same_alphabet(first: SigmaSet, second: SigmaSet):
    if first.alphabet != second.alphabet:
        raise MorphismError(f"alphabets differ: {first.alphabet} vs {second.alphabet}")


def product(first: SigmaSet, second: SigmaSet) -> SigmaSet:
    """Componentwise action on pairs; the pair (i, j) has index i·|S2| + j"""
    _same_alphabet(first, second)
    n2 = second.size
    names = [f"({p},{q})" for p in first.states for q in second.states]
    delta = (first.delta[:, None, :] * n2 + second.delta[None, :, :]).reshape(first.size * n2, len(first.alphabet))
    return SigmaSet(names, delta, first.alphabet)


def product_projections(first: SigmaSet, second: SigmaSet) -> Tuple[SigmaSetMorphism, SigmaSetMorphism]:
    both = product(first, second)
    n1, n2 = first.size, second.size
    left = SigmaSetMorphism(both, first, tuple(np.repeat(np.arange(n1), n2)))
    right = SigmaSetMorphism(both, second, tuple(np.tile(np.arange(n2), n1)))
    return left, right


def pairing(f: SigmaSetMorphism, g: SigmaSetMorphism) -> SigmaSetMorphism:
    """⟨f, g⟩: X → S1 × S2"""
    if f.source != g.source:
        raise MorphismError("pairing needs morphisms with a common source")
    n2 = g.target.size
    return SigmaSetMorphism(f.source, product(f.target, g.target),
                            tuple(a * n2 + b for a, b in zip(f.mapping, g.mapping)))


def coproduct(first: SigmaSet, second: SigmaSet) -> SigmaSet:
    """Disjoint union; states of the second summand are shifted by |S1|"""
    _same_alphabet(first, second)
    names = [f"inl({p})" for p in first.states] + [f"inr({q})" for q in second.states]
    delta = np.concatenate([first.delta, second.delta + first.size]) if names else first.delta
    return SigmaSet(names, delta, first.alphabet)


def coproduct_injections(first: SigmaSet, second: SigmaSet) -> Tuple[SigmaSetMorphism, SigmaSetMorphism]:
    both = coproduct(first, second)
    left = SigmaSetMorphism(first, both, tuple(range(first.size)))
    right = SigmaSetMorphism(second, both, tuple(range(first.size, first.size + second.size)))
    return left, right


def copairing(f: SigmaSetMorphism, g: SigmaSetMorphism) -> SigmaSetMorphism:
    """[f, g]: S1 + S2 → X"""
    if f.target != g.target:
        raise MorphismError("copairing needs morphisms with a common target")
    return SigmaSetMorphism(coproduct(f.source, g.source), f.target, f.mapping + g.mapping)


# --- quotients ----------------------------------------------------------------

def _block_assignment(sigma_set: SigmaSet, blocks: Sequence[Sequence[StateRef]]) -> np.ndarray:
    block_of = np.full(sigma_set.size, -1, dtype=np.int64)
    for b, block in enumerate(blocks):
        if not block:
            raise CongruenceError(f"block {b} is empty")
        for state in block:
            q = sigma_set.resolve(state)
            if block_of[q] != -1:
                raise CongruenceError(f"state {sigma_set.states[q]} appears in two blocks")
            block_of[q] = b
    missing = np.flatnonzero(block_of == -1)
    if missing.size:
        raise CongruenceError(f"state {sigma_set.states[missing[0]]} is in no block")
    return block_of


def congruence_violation(sigma_set: SigmaSet, blocks: Sequence[Sequence[StateRef]]):
    """First ((p, q), symbol) with p ~ q but δ(p,a) ≁ δ(q,a), or None"""
    block_of = _block_assignment(sigma_set, blocks)
    image = block_of[sigma_set.delta]  # image[q, i] = block of δ(q, a_i)
    for b in range(len(blocks)):
        members = np.flatnonzero(block_of == b)
        first = members[0]
        for q in members[1:]:
            differs = np.flatnonzero(image[q] != image[first])
            if differs.size:
                return ((sigma_set.states[first], sigma_set.states[q]),
                        sigma_set.alphabet.symbols[differs[0]])
    return None


def _block_name(sigma_set: SigmaSet, members: np.ndarray) -> str:
    names = [sigma_set.states[q] for q in members]
    return names[0] if len(names) == 1 else "{" + ",".join(names) + "}"


def quotient_map(sigma_set: SigmaSet, blocks: Sequence[Sequence[StateRef]]) -> SigmaSetMorphism:
    """
    Projection onto the quotient by a partition that must be a congruence

    Raises:
        CongruenceError: with the witness pair and symbol when related states
            have unrelated successors, or when the blocks are not a partition
    """
    violation = congruence_violation(sigma_set, blocks)
    if violation is not None:
        pair, symbol = violation
        raise CongruenceError(f"{pair[0]} ~ {pair[1]} but their {symbol}-successors are not related",
                              pair, symbol)
    block_of = _block_assignment(sigma_set, blocks)
    members = [np.flatnonzero(block_of == b) for b in range(len(blocks))]
    names = [_block_name(sigma_set, m) for m in members]
    delta = np.array([block_of[sigma_set.delta[m[0]]] for m in members], dtype=np.int64)
    quotient_set = SigmaSet(names, delta.reshape(len(blocks), len(sigma_set.alphabet)), sigma_set.alphabet)
    return SigmaSetMorphism(sigma_set, quotient_set, tuple(block_of))


def quotient(sigma_set: SigmaSet, blocks: Sequence[Sequence[StateRef]]) -> SigmaSet:
    """Quotient Σ-set by a congruence given as explicit blocks"""
    return quotient_map(sigma_set, blocks).target


def congruence_closure(sigma_set: SigmaSet, pairs: Sequence[Tuple[StateRef, StateRef]]) -> List[List[str]]:
    """
    Least congruence containing a seed relation

    Returns:
        Blocks of state names, ordered by their first state index
    """
    related = DisjointSet(range(sigma_set.size))
    pending = []
    for p, q in pairs:
        a, b = sigma_set.resolve(p), sigma_set.resolve(q)
        if related.merge(a, b):
            pending.append((a, b))
    while pending:
        p, q = pending.pop()
        for i in range(len(sigma_set.alphabet)):
            a, b = int(sigma_set.delta[p, i]), int(sigma_set.delta[q, i])
            if related.merge(a, b):
                pending.append((a, b))
    blocks = sorted((sorted(subset) for subset in related.subsets()), key=lambda block: block[0])
    return [[sigma_set.states[q] for q in block] for block in blocks]


# --- Moore machines -----------------------------------------------------------

def moore_run(sigma_set: SigmaSet, output: Callable[[str], Any], state: StateRef, word: str) -> Any:
    """
    Transposed behaviour g♭(q)(w) = g♯(q·w) of an output map on states

    Args:
        sigma_set: The underlying Σ-set
        output: Output map on state names
        state: Start state q
        word: Input word w

    Returns:
        The output at the state reached from q by w
    """
    return output(sigma_set.states[sigma_set.run(state, word)])


def moore_behaviour(sigma_set: SigmaSet, output: Callable[[str], Any], state: StateRef,
                    max_length: int) -> Dict[str, Any]:
    """Behaviour of a state tabulated on all words up to max_length"""
    return {w: moore_run(sigma_set, output, state, w) for w in sigma_set.alphabet.words(max_length)}


def moore_output_from_behaviour(behaviour: Mapping[str, Any]) -> Any:
    """Recover the output at a state from its behaviour: g♯(q) = g♭(q)(ε)"""
    return behaviour[""]


def unique_names(names: Sequence[str]) -> List[str]:
    """
    Suffix repeated names with #1, #2, ... in order of appearance

    A suffixed name never collides with a name given in the input or
    produced earlier.
    """
    taken = set(names)
    counts: Dict[str, int] = {}
    used = set()
    unique = []
    for name in names:
        if name not in used:
            used.add(name)
            unique.append(name)
            continue
        count = counts.get(name, 0)
        while True:
            count += 1
            candidate = f"{name}#{count}"
            if candidate not in taken and candidate not in used:
                break
        counts[name] = count
        used.add(candidate)
        unique.append(candidate)
    return unique
