"""
Finite systems of Σ-monoid quotients approximating profinite words
"""
import sys
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from monoids.monoid import FiniteMonoid, SigmaMonoid, homomorphism_violation
from utils.errors import ConnectorError
from utils.helpers import EPSILON_DISPLAY, setup_logging

logger = setup_logging(__name__)


@dataclass(frozen=True)
class Connector:
    """A monoid homomorphism between two nodes, given by node positions"""
    source: int
    target: int
    mapping: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(int(x) for x in self.mapping))

    def __call__(self, element: int) -> int:
        return self.mapping[element]


@dataclass(frozen=True)
class ProfiniteSystem:
    """Nodes (Σ-monoids) linked by connectors; validated by build_system"""
    nodes: Tuple[SigmaMonoid, ...]
    connectors: Tuple[Connector, ...]

    @property
    def alphabet(self):
        return self.nodes[0].alphabet


def _check_connector(connector: Connector, nodes: Sequence[SigmaMonoid]):
    if not (0 <= connector.source < len(nodes) and 0 <= connector.target < len(nodes)):
        raise ConnectorError(f"connector {connector.source}->{connector.target} names a missing node")
    source, target = nodes[connector.source], nodes[connector.target]
    mapping = connector.mapping
    if len(mapping) != source.size or any(not 0 <= x < target.size for x in mapping):
        raise ConnectorError(f"connector {connector.source}->{connector.target} has the wrong shape")

    pair = homomorphism_violation(mapping, source.monoid, target.monoid)
    if pair is not None:
        raise ConnectorError(
            f"connector {connector.source}->{connector.target} is not a homomorphism at {pair}", pair=pair
        )
    for symbol, element in source.generators.items():
        if mapping[element] != target.generators[symbol]:
            raise ConnectorError(
                f"connector {connector.source}->{connector.target} sends m_{symbol} to "
                f"{mapping[element]}, expected {target.generators[symbol]}",
                symbol=symbol,
            )


def build_system(nodes: Sequence[SigmaMonoid], connectors: Sequence[Connector] = ()) -> ProfiniteSystem:
    """
    Validate nodes and connectors into a ProfiniteSystem

    Raises:
        ConnectorError: a connector is not a homomorphism (witness pair),
            does not send generators to generators (witness symbol), or
            disagrees with the composite of two other connectors
    """
    nodes = tuple(nodes)
    connectors = tuple(connectors)
    if not nodes:
        raise ConnectorError("a system needs at least one node")
    alphabet = nodes[0].alphabet
    for position, node in enumerate(nodes):
        if node.alphabet != alphabet:
            raise ConnectorError(f"node {position} is over alphabet {node.alphabet}, expected {alphabet}")
        if not node.is_generated():
            logger.warning(f"node {position} is not generated by its Σ-generators; only the generated part is reached by words")

    for connector in connectors:
        _check_connector(connector, nodes)

    direct = {(c.source, c.target): c for c in connectors}
    for first in connectors:
        for second in connectors:
            if first.target != second.source:
                continue
            stated = direct.get((first.source, second.target))
            if stated is None:
                continue
            for x, y in enumerate(first.mapping):
                if stated.mapping[x] != second.mapping[y]:
                    raise ConnectorError(
                        f"connector {first.source}->{second.target} disagrees with the composite "
                        f"through node {first.target} at element {x}",
                        pair=(x, x),
                    )
    return ProfiniteSystem(nodes, connectors)


@dataclass(frozen=True)
class ProfiniteWordApprox:
    """One element per node of a system"""
    system: ProfiniteSystem
    components: Tuple[int, ...]

    def compatibility_violation(self) -> Optional[Connector]:
        for connector in self.system.connectors:
            if connector(self.components[connector.source]) != self.components[connector.target]:
                return connector
        return None

    def is_compatible(self) -> bool:
        """Every connector maps the source component to the target component"""
        return self.compatibility_violation() is None

    def multiply(self, other: "ProfiniteWordApprox") -> "ProfiniteWordApprox":
        """Componentwise product"""
        return ProfiniteWordApprox(self.system, tuple(
            node.monoid.multiply(x, y) for node, x, y in zip(self.system.nodes, self.components, other.components)
        ))

    def named_components(self) -> List[str]:
        return [node.monoid.name(x) for node, x in zip(self.system.nodes, self.components)]


def embed_word(system: ProfiniteSystem, word: str) -> ProfiniteWordApprox:
    """The finite word w seen at every node: hom(w) componentwise"""
    return ProfiniteWordApprox(system, tuple(node.hom(word) for node in system.nodes))


def join_nodes(first: SigmaMonoid, second: SigmaMonoid) -> Tuple[SigmaMonoid, Connector, Connector]:
    """
    Σ-generated submonoid of first × second, with both projections

    Elements are named by shortlex-least words. The projections are
    returned as connectors from node 0 (the join) to nodes 1 and 2.
    """
    if first.alphabet != second.alphabet:
        raise ConnectorError("cannot join nodes over different alphabets")
    alphabet = first.alphabet
    g1, g2 = first.generator_array(), second.generator_array()
    t1, t2 = first.monoid.table, second.monoid.table

    start = (first.monoid.identity, second.monoid.identity)
    index: Dict[Tuple[int, int], int] = {start: 0}
    pairs = [start]
    names = [EPSILON_DISPLAY]
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        for i, symbol in enumerate(alphabet):
            nxt = (int(t1[x, g1[i]]), int(t2[y, g2[i]]))
            if nxt not in index:
                index[nxt] = len(pairs)
                pairs.append(nxt)
                names.append((names[index[(x, y)]] if index[(x, y)] else "") + symbol)
                queue.append(nxt)

    size = len(pairs)
    table = np.zeros((size, size), dtype=np.int64)
    for i, (x1, y1) in enumerate(pairs):
        for j, (x2, y2) in enumerate(pairs):
            table[i, j] = index[(int(t1[x1, x2]), int(t2[y1, y2]))]
    generators = {a: index[(int(g1[i]), int(g2[i]))] for i, a in enumerate(alphabet)}
    joined = SigmaMonoid(FiniteMonoid(table, 0, names), generators, alphabet)
    left = Connector(0, 1, tuple(p[0] for p in pairs))
    right = Connector(0, 2, tuple(p[1] for p in pairs))
    return joined, left, right


def join_system(first: SigmaMonoid, second: SigmaMonoid) -> ProfiniteSystem:
    """System of the join over two nodes: nodes (join, first, second)"""
    joined, left, right = join_nodes(first, second)
    return build_system([joined, first, second], [left, right])
