"""
JSON documents for languages, Σ-sets, automata, monoids, systems and
bridge reports
"""
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Union

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from automata.automaton import Automaton, PointedAutomaton, make_automaton
from bridge.witnesses import BridgeReport, ClauseResult
from language.alphabet import Alphabet
from language.regex import (
    Complement, Concat, Empty, Epsilon, Intersect, Language, Literal, Node, Star, Union as UnionNode,
    EMPTY, EPSILON, complement, concat, intersect, star, union,
)
from monoids.monoid import FiniteMonoid, MonoidRecognizer, SigmaMonoid, make_monoid
from profinite.system import Connector, ProfiniteSystem, ProfiniteWordApprox, build_system
from sigma_sets.sigma_set import SigmaSet, make_sigma_set
from utils.errors import FormatError
from utils.helpers import setup_logging

logger = setup_logging(__name__)

_NARY = {"concat": (Concat, concat), "union": (UnionNode, union), "intersect": (Intersect, intersect)}
_UNARY = {"complement": (Complement, complement), "star": (Star, star)}


def dumps(document: Dict) -> str:
    """Stable JSON text: insertion-ordered keys, two-space indent, UTF-8 symbols kept"""
    return json.dumps(document, ensure_ascii=False, indent=2)


def loads(text: str) -> Dict:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        logger.error(f"malformed JSON: {e}")
        raise FormatError(f"malformed JSON: {e}") from e
    if not isinstance(document, dict):
        raise FormatError("expected a JSON object at the top level")
    return document


def load_file(path: Union[str, Path]) -> Dict:
    with open(path, "r", encoding="utf-8") as f:
        return loads(f.read())


def _guarded(kind: str, build: Callable[[], Any]) -> Any:
    """Run a loader body, turning layout errors into FormatError"""
    try:
        return build()
    except FormatError:
        raise
    except (KeyError, TypeError, IndexError, AttributeError) as e:
        logger.error(f"malformed {kind} document: {e!r}")
        raise FormatError(f"malformed {kind} document: {e!r}") from e


def _alphabet(document: Dict, default: Optional[Alphabet] = None) -> Alphabet:
    """
    The declared alphabet, else the given default, else the order of the
    generator keys of a monoid document
    """
    if "alphabet" not in document:
        if default is not None:
            return default
        if isinstance(document.get("generators"), dict):
            return Alphabet(list(document["generators"]))
    symbols = document["alphabet"]
    if not isinstance(symbols, (list, str)):
        raise FormatError("alphabet must be a list of symbols or a string")
    return Alphabet(list(symbols))


# --- languages ----------------------------------------------------------------

def node_to_json(node: Node) -> Dict:
    if isinstance(node, Empty):
        return {"tag": "empty"}
    if isinstance(node, Epsilon):
        return {"tag": "epsilon"}
    if isinstance(node, Literal):
        return {"tag": "literal", "symbol": node.symbol}
    for tag, (cls, _) in _NARY.items():
        if isinstance(node, cls):
            return {"tag": tag, "children": [node_to_json(c) for c in node.children]}
    for tag, (cls, _) in _UNARY.items():
        if isinstance(node, cls):
            return {"tag": tag, "child": node_to_json(node.child)}
    raise TypeError(f"unknown expression node {node!r}")


def node_from_json(document: Dict) -> Node:
    tag = document["tag"]
    if tag == "empty":
        return EMPTY
    if tag == "epsilon":
        return EPSILON
    if tag == "literal":
        return Literal(document["symbol"])
    if tag in _NARY:
        return _NARY[tag][1](*(node_from_json(c) for c in document["children"]))
    if tag in _UNARY:
        return _UNARY[tag][1](node_from_json(document["child"]))
    raise FormatError(f"unknown node tag {tag!r}")


def language_to_json(language: Language) -> Dict:
    return {
        "alphabet": list(language.alphabet),
        "regex": str(language),
        "ast": node_to_json(language.ast),
    }


def language_from_json(document: Dict) -> Language:
    return _guarded("language", lambda: Language(node_from_json(document["ast"]), _alphabet(document)))


# --- Σ-sets and automata ------------------------------------------------------

def sigma_set_to_json(sigma_set: SigmaSet) -> Dict:
    return {
        "alphabet": list(sigma_set.alphabet),
        "states": list(sigma_set.states),
        "delta": sigma_set.table(),
    }


def sigma_set_from_json(document: Dict) -> SigmaSet:
    return _guarded("Σ-set", lambda: make_sigma_set(document["states"], document["delta"], _alphabet(document)))


def automaton_to_json(automaton: Union[Automaton, PointedAutomaton]) -> Dict:
    pointed = automaton if isinstance(automaton, PointedAutomaton) else None
    plain = pointed.automaton if pointed else automaton
    document = sigma_set_to_json(plain.carrier)
    document["accept"] = plain.accepting_names()
    if pointed is not None:
        document["start"] = plain.carrier.states[pointed.start]
    return document


def automaton_from_json(document: Dict) -> Union[Automaton, PointedAutomaton]:
    """A PointedAutomaton when the document names a start state, else an Automaton"""
    def build():
        automaton = make_automaton(sigma_set_from_json(document), document.get("accept", []))
        if "start" in document:
            return PointedAutomaton(automaton, automaton.carrier.resolve(document["start"]))
        return automaton
    return _guarded("automaton", build)


# --- monoids ------------------------------------------------------------------

def monoid_to_json(subject: Union[FiniteMonoid, SigmaMonoid, MonoidRecognizer]) -> Dict:
    recognizer = subject if isinstance(subject, MonoidRecognizer) else None
    sigma_monoid = recognizer.sigma_monoid if recognizer else subject if isinstance(subject, SigmaMonoid) else None
    monoid = sigma_monoid.monoid if sigma_monoid else subject
    document: Dict[str, Any] = {
        "size": monoid.size,
        "identity": monoid.identity,
        "table": monoid.table.tolist(),
        "element_names": list(monoid.element_names),
    }
    if sigma_monoid is not None:
        document["alphabet"] = list(sigma_monoid.alphabet)
        document["generators"] = dict(sigma_monoid.generators)
    if recognizer is not None:
        document["accepting"] = sorted(recognizer.accepting)
    return document


def monoid_from_json(document: Dict,
                     alphabet: Optional[Alphabet] = None) -> Union[FiniteMonoid, SigmaMonoid, MonoidRecognizer]:
    """
    The most specific object the document describes

    Without an "alphabet" key the given alphabet is used, else the order of
    the generator keys.
    """
    def build():
        table = document["table"]
        if "size" in document and document["size"] != len(table):
            raise FormatError(f"size {document['size']} does not match a table of {len(table)} rows")
        monoid = make_monoid(table, int(document["identity"]), document.get("element_names"))
        if "generators" not in document:
            return monoid
        sigma_monoid = SigmaMonoid(monoid, document["generators"], _alphabet(document, alphabet))
        if "accepting" not in document:
            return sigma_monoid
        return MonoidRecognizer(sigma_monoid, frozenset(document["accepting"]))
    return _guarded("monoid", build)


def recognizer_from_json(document: Dict, alphabet: Optional[Alphabet] = None) -> MonoidRecognizer:
    loaded = monoid_from_json(document, alphabet)
    if not isinstance(loaded, MonoidRecognizer):
        raise FormatError("a recognizer document needs 'generators' and 'accepting'")
    return loaded


# --- profinite systems --------------------------------------------------------

def system_to_json(system: ProfiniteSystem) -> Dict:
    return {
        "alphabet": list(system.alphabet),
        "nodes": [monoid_to_json(node) for node in system.nodes],
        "connectors": [{"from": c.source, "to": c.target, "map": list(c.mapping)} for c in system.connectors],
    }


def system_from_json(document: Dict, alphabet: Optional[Alphabet] = None) -> ProfiniteSystem:
    """
    Nodes without an "alphabet" key use the system alphabet, else the given
    one, else the alphabet of the first node
    """
    def build():
        shared = _alphabet(document) if "alphabet" in document else alphabet
        nodes = []
        for position, node_document in enumerate(document["nodes"]):
            node = monoid_from_json(node_document, shared)
            if isinstance(node, MonoidRecognizer):
                node = node.sigma_monoid
            if not isinstance(node, SigmaMonoid):
                raise FormatError(f"node {position} has no generators")
            nodes.append(node)
            if shared is None:
                shared = node.alphabet
        connectors = [Connector(int(c["from"]), int(c["to"]), c["map"]) for c in document.get("connectors", [])]
        return build_system(nodes, connectors)
    return _guarded("system", build)


def approx_to_json(approx: ProfiniteWordApprox) -> Dict:
    return {
        "components": [
            {"node": i, "element": x, "name": node.monoid.name(x)}
            for i, (node, x) in enumerate(zip(approx.system.nodes, approx.components))
        ],
        "compatible": approx.is_compatible(),
    }


# --- reports ------------------------------------------------------------------

def report_to_json(report: BridgeReport) -> Dict:
    return report.to_dict()


def report_from_json(document: Dict) -> BridgeReport:
    def build():
        clauses = tuple(
            ClauseResult(entry["name"], bool(entry["pass"]), entry.get("witness"))
            for entry in document["clauses"]
        )
        return BridgeReport(document.get("language", ""), clauses)
    return _guarded("report", build)
