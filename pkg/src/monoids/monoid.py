"""
Finite monoids, Σ-monoids and monoid recognizers
"""
import sys
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from language.alphabet import Alphabet
from sigma_sets.sigma_set import SigmaSet
from utils.config import MONOID_CONFIG, VERIFICATION_CONFIG
from utils.errors import AssociativityError, IdentityError, MonoidTableError, MorphismError
from utils.helpers import setup_logging

logger = setup_logging(__name__)


class FiniteMonoid:
    """
    A finite monoid given by its multiplication table

    table[x, y] is the index of x·y. Instances are built through
    make_monoid, which validates the table.
    """

    def __init__(self, table: np.ndarray, identity: int, element_names: Optional[Sequence[str]] = None):
        table = np.array(table, dtype=np.int64)
        table.setflags(write=False)
        self.table = table
        self.identity = int(identity)
        names = [str(i) for i in range(len(table))] if element_names is None else [str(n) for n in element_names]
        if len(names) != len(table) or len(set(names)) != len(names):
            raise MonoidTableError("element names must be unique, one per element")
        self.element_names = tuple(names)

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def multiply(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def product(self, elements: Iterable[int]) -> int:
        result = self.identity
        for x in elements:
            result = int(self.table[result, x])
        return result

    def power(self, x: int, exponent: int) -> int:
        return self.product([x] * exponent)

    def is_idempotent(self, x: int) -> bool:
        return int(self.table[x, x]) == x

    def name(self, x: int) -> str:
        return self.element_names[x]

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteMonoid) and self.identity == other.identity
                and np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        return hash((self.identity, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteMonoid(size={self.size}, identity={self.identity})"


def associativity_violation(table: np.ndarray, exhaustive_limit: Optional[int] = None,
                            spot_checks: Optional[int] = None) -> Optional[Tuple[int, int, int]]:
    """
    First triple with (x·y)·z ≠ x·(y·z), or None

    Tables up to exhaustive_limit elements are checked on all n³ triples;
    larger ones on a seeded random sample.
    """
    n = len(table)
    limit = MONOID_CONFIG["full_associativity_limit"] if exhaustive_limit is None else exhaustive_limit
    if n <= limit:
        left = table[table]          # [x, y, z] -> (x·y)·z
        right = table[:, table]      # [x, y, z] -> x·(y·z)
        bad = np.argwhere(left != right)
        return tuple(int(v) for v in bad[0]) if bad.size else None

    samples = MONOID_CONFIG["associativity_spot_checks"] if spot_checks is None else spot_checks
    rng = np.random.default_rng(VERIFICATION_CONFIG["seed"])
    x, y, z = rng.integers(0, n, size=(3, samples))
    bad = np.flatnonzero(table[table[x, y], z] != table[x, table[y, z]])
    if bad.size:
        i = bad[0]
        return int(x[i]), int(y[i]), int(z[i])
    logger.debug(f"associativity spot-checked on {samples} triples for a monoid of size {n}")
    return None


def make_monoid(table, identity: int, element_names: Optional[Sequence[str]] = None) -> FiniteMonoid:
    """
    Validate a multiplication table and build a FiniteMonoid

    Raises:
        MonoidTableError: table not square or entries out of range
        IdentityError: identity is not a two-sided unit
        AssociativityError: with the failing triple
    """
    table = np.asarray(table, dtype=np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise MonoidTableError(f"table must be a non-empty square, got shape {table.shape}")
    n = len(table)
    if table.min() < 0 or table.max() >= n:
        raise MonoidTableError("table entries out of range")
    if not 0 <= identity < n:
        raise MonoidTableError(f"identity {identity} out of range")

    elements = np.arange(n)
    for side in (table[identity], table[:, identity]):
        bad = np.flatnonzero(side != elements)
        if bad.size:
            raise IdentityError(identity, int(bad[0]))

    triple = associativity_violation(table)
    if triple is not None:
        raise AssociativityError(triple)
    return FiniteMonoid(table, identity, element_names)


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid(np.zeros((1, 1), dtype=np.int64), 0, ["e"])


def cyclic_group(order: int) -> FiniteMonoid:
    """Z_n under addition, element i named 'i'"""
    elements = np.arange(order)
    return make_monoid((elements[:, None] + elements[None, :]) % order, 0)


def idempotent_power(monoid: FiniteMonoid, x: int) -> int:
    """The unique idempotent among x, x², x³, …"""
    current = int(x)
    for _ in range(monoid.size):
        if monoid.is_idempotent(current):
            return current
        current = int(monoid.table[current, x])
    raise MonoidTableError(f"no idempotent power found for element {x}")


def generated_submonoid(monoid: FiniteMonoid, generators: Iterable[int]) -> List[int]:
    """Elements reachable from the identity by right multiplication, in discovery order"""
    generators = list(dict.fromkeys(int(g) for g in generators))
    seen = {monoid.identity: None}
    queue = deque([monoid.identity])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = int(monoid.table[x, g])
            if y not in seen:
                seen[y] = None
                queue.append(y)
    return list(seen)


def homomorphism_violation(mapping: Sequence[int], source: FiniteMonoid,
                           target: FiniteMonoid) -> Optional[Tuple[int, int]]:
    """
    First pair (x, y) with f(x·y) ≠ f(x)·f(y), or None

    A map that does not send the identity to the identity is reported as
    the pair (e, e).
    """
    f = np.asarray(mapping, dtype=np.int64)
    if f.shape != (source.size,) or f.min() < 0 or f.max() >= target.size:
        raise MorphismError("map must send every source element into the target")
    if f[source.identity] != target.identity:
        return source.identity, source.identity
    left = f[source.table]
    right = target.table[f[:, None], f[None, :]]
    bad = np.argwhere(left != right)
    return (int(bad[0][0]), int(bad[0][1])) if bad.size else None


def is_monoid_homomorphism(mapping: Sequence[int], source: FiniteMonoid, target: FiniteMonoid) -> bool:
    return homomorphism_violation(mapping, source, target) is None


@dataclass(frozen=True)
class SigmaMonoid:
    """
    A finite monoid with one generator element m_a per symbol

    transformations, when present, records the state map behind each element
    of a transition monoid.
    """
    monoid: FiniteMonoid
    generators: Mapping[str, int]
    alphabet: Alphabet
    transformations: Optional[Tuple[Tuple[int, ...], ...]] = field(default=None, compare=False)

    def __post_init__(self):
        generators = {a: int(self.generators[a]) for a in self.alphabet if a in self.generators}
        missing = [a for a in self.alphabet if a not in generators]
        if missing:
            raise MorphismError(f"no generator element for symbol {missing[0]!r}")
        extra = set(self.generators) - set(self.alphabet.symbols)
        if extra:
            raise MorphismError(f"generator for symbol {sorted(extra)[0]!r} outside the alphabet")
        if any(not 0 <= m < self.monoid.size for m in generators.values()):
            raise MorphismError("generator element out of range")
        object.__setattr__(self, "generators", generators)

    def __hash__(self) -> int:
        return hash((self.monoid, tuple(self.generators.items()), self.alphabet))

    @property
    def size(self) -> int:
        return self.monoid.size

    def generator_array(self) -> np.ndarray:
        return np.array([self.generators[a] for a in self.alphabet], dtype=np.int64)

    def hom(self, word: str) -> int:
        """Image of a word under the homomorphism Σ* → M induced by a ↦ m_a"""
        self.alphabet.check_word(word)
        return self.monoid.product(self.generators[a] for a in word)

    def is_generated(self) -> bool:
        return len(generated_submonoid(self.monoid, self.generators.values())) == self.monoid.size


@dataclass(frozen=True)
class MonoidRecognizer:
    """A Σ-monoid with an accepting subset S; recognizes hom⁻¹(S)"""
    sigma_monoid: SigmaMonoid
    accepting: FrozenSet[int]

    def __post_init__(self):
        accepting = frozenset(int(m) for m in self.accepting)
        if any(not 0 <= m < self.sigma_monoid.size for m in accepting):
            raise MorphismError("accepting element out of range")
        object.__setattr__(self, "accepting", accepting)

    @property
    def monoid(self) -> FiniteMonoid:
        return self.sigma_monoid.monoid

    @property
    def alphabet(self) -> Alphabet:
        return self.sigma_monoid.alphabet

    def hom(self, word: str) -> int:
        return self.sigma_monoid.hom(word)

    def accepts(self, word: str) -> bool:
        return self.hom(word) in self.accepting


def as_sigma_set(sigma_monoid: SigmaMonoid) -> SigmaSet:
    """The monoid's elements acted on by right multiplication: m·a = m·m_a"""
    monoid = sigma_monoid.monoid
    delta = monoid.table[:, sigma_monoid.generator_array()]
    return SigmaSet(monoid.element_names, delta.reshape(monoid.size, len(sigma_monoid.alphabet)),
                    sigma_monoid.alphabet)


def sigma_monoid_morphism_violation(mapping: Sequence[int], source: SigmaMonoid,
                                    target: SigmaMonoid) -> Optional[Tuple[int, str]]:
    """First (x, a) with f(x·m_a) ≠ f(x)·m′_a, or None"""
    if source.alphabet != target.alphabet:
        raise MorphismError("Σ-monoids over different alphabets")
    f = np.asarray(mapping, dtype=np.int64)
    if f.shape != (source.size,) or f.min() < 0 or f.max() >= target.size:
        raise MorphismError("map must send every source element into the target")
    left = f[source.monoid.table[:, source.generator_array()]]
    right = target.monoid.table[f[:, None], target.generator_array()[None, :]]
    bad = np.argwhere(left != right)
    if bad.size == 0:
        return None
    x, i = map(int, bad[0])
    return x, source.alphabet.symbols[i]


def check_sigma_monoid_morphism(mapping: Sequence[int], source: SigmaMonoid, target: SigmaMonoid) -> bool:
    """True iff f(x·m_a) = f(x)·m′_a for every element x and symbol a"""
    return sigma_monoid_morphism_violation(mapping, source, target) is None


@dataclass(frozen=True)
class IsomorphismResult:
    """Generator-preserving isomorphism as an element map, or a witness word"""
    mapping: Optional[Tuple[int, ...]]
    witness: Optional[str] = None

    @property
    def isomorphic(self) -> bool:
        return self.mapping is not None


def sigma_monoid_isomorphism(first: SigmaMonoid, second: SigmaMonoid) -> IsomorphismResult:
    """
    Search for an isomorphism sending m_a to m′_a for every symbol

    Such a map is forced on the generated part: hom₁(w) ↦ hom₂(w). The
    witness is a word whose image breaks the forced map, or the name of an
    element no word reaches.
    """
    if first.alphabet != second.alphabet:
        return IsomorphismResult(None, "alphabets differ")
    g1, g2 = first.generator_array(), second.generator_array()
    t1, t2 = first.monoid.table, second.monoid.table
    symbols = first.alphabet.symbols

    forward = {first.monoid.identity: second.monoid.identity}
    backward = {second.monoid.identity: first.monoid.identity}
    access = {first.monoid.identity: ""}
    queue = deque([first.monoid.identity])
    while queue:
        x = queue.popleft()
        y = forward[x]
        for i, symbol in enumerate(symbols):
            nx, ny = int(t1[x, g1[i]]), int(t2[y, g2[i]])
            word = access[x] + symbol
            if nx in forward:
                if forward[nx] != ny:
                    return IsomorphismResult(None, word)
                continue
            if ny in backward:
                return IsomorphismResult(None, word)
            forward[nx], backward[ny] = ny, nx
            access[nx] = word
            queue.append(nx)

    for monoid, covered in ((first.monoid, forward), (second.monoid, backward)):
        for x in range(monoid.size):
            if x not in covered:
                return IsomorphismResult(None, monoid.name(x))
    mapping = tuple(forward[x] for x in range(first.size))
    pair = homomorphism_violation(mapping, first.monoid, second.monoid)
    if pair is not None:
        return IsomorphismResult(None, f"{access[pair[0]] or 'ε'}·{access[pair[1]] or 'ε'}")
    return IsomorphismResult(mapping)


def cayley_table(monoid: FiniteMonoid) -> pd.DataFrame:
    """Multiplication table labelled by element names; rows are the left factor"""
    names = np.array(monoid.element_names, dtype=object)
    return pd.DataFrame(names[monoid.table], index=list(monoid.element_names),
                        columns=list(monoid.element_names))


def render_cayley_table(monoid: FiniteMonoid) -> str:
    return cayley_table(monoid).to_string()
