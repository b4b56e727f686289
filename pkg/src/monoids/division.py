"""
Division of finite monoids: M divides N when M is a quotient of a
submonoid of N
"""
import itertools
import sys
from collections import deque
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from utils.config import MONOID_CONFIG
from utils.helpers import setup_logging, timing_decorator

from .monoid import FiniteMonoid, generated_submonoid

logger = setup_logging(__name__)


class DivisionStatus(Enum):
    DIVIDES = "divides"
    DOES_NOT_DIVIDE = "does_not_divide"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class DivisionResult:
    """Verdict plus, when M divides N, the submonoid of N and the surjection onto M"""
    status: DivisionStatus
    submonoid: Tuple[int, ...] = ()
    mapping: Optional[Dict[int, int]] = None

    @property
    def divides(self) -> Optional[bool]:
        if self.status is DivisionStatus.UNKNOWN:
            return None
        return self.status is DivisionStatus.DIVIDES


def _submonoids(monoid: FiniteMonoid) -> List[Tuple[int, ...]]:
    """Distinct submonoids generated by subsets, smallest generating sets first"""
    found = {}
    elements = range(monoid.size)
    for count in range(monoid.size + 1):
        for subset in itertools.combinations(elements, count):
            members = tuple(sorted(generated_submonoid(monoid, subset)))
            found.setdefault(members, None)
    return list(found)


def _generating_set(monoid: FiniteMonoid, members: Sequence[int]) -> List[int]:
    generators: List[int] = []
    closure = {monoid.identity}
    for x in members:
        if x not in closure:
            generators.append(x)
            closure = set(generated_submonoid(monoid, generators))
    return generators


def _extend(source: FiniteMonoid, target: FiniteMonoid, generators: Sequence[int],
            images: Sequence[int]) -> Optional[Dict[int, int]]:
    """The homomorphism fixed by generator images, or None if they are inconsistent"""
    value = {source.identity: target.identity}
    queue = deque([source.identity])
    while queue:
        x = queue.popleft()
        for g, image in zip(generators, images):
            y = source.multiply(x, g)
            fy = target.multiply(value[x], image)
            if y in value:
                if value[y] != fy:
                    return None
            else:
                value[y] = fy
                queue.append(y)
    for x in value:
        for y in value:
            if value[source.multiply(x, y)] != target.multiply(value[x], value[y]):
                return None
    return value


@timing_decorator
def divides(quotient: FiniteMonoid, monoid: FiniteMonoid, budget: Optional[int] = None) -> DivisionResult:
    """
    Exhaustive division test

    Every submonoid T of the larger monoid generated by a subset is tried;
    for each, every assignment of images to a generating set of T is
    extended to a homomorphism and checked for surjectivity.

    Args:
        quotient: The candidate divisor M
        monoid: The monoid N searched for a submonoid mapping onto M
        budget: Largest |N| searched; defaults to MONOID_CONFIG

    Returns:
        DivisionResult: UNKNOWN when |N| exceeds the budget
    """
    budget = MONOID_CONFIG["divides_budget"] if budget is None else budget
    if quotient.size == 1:
        return DivisionResult(DivisionStatus.DIVIDES, (monoid.identity,), {monoid.identity: 0})
    if monoid.size > budget:
        logger.info(f"division search skipped: |N| = {monoid.size} exceeds budget {budget}")
        return DivisionResult(DivisionStatus.UNKNOWN)

    targets = range(quotient.size)
    for members in _submonoids(monoid):
        if len(members) < quotient.size:
            continue
        generators = _generating_set(monoid, members)
        for images in itertools.product(targets, repeat=len(generators)):
            mapping = _extend(monoid, quotient, generators, images)
            if mapping is not None and len(set(mapping.values())) == quotient.size:
                return DivisionResult(DivisionStatus.DIVIDES, members, mapping)
    return DivisionResult(DivisionStatus.DOES_NOT_DIVIDE)
