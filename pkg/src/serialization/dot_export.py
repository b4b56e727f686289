"""
DOT rendering of Σ-sets and automata through graphviz
"""
import sys
from collections import defaultdict
from pathlib import Path
from typing import Optional, Union

import graphviz

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from automata.automaton import Automaton, PointedAutomaton
from sigma_sets.sigma_set import SigmaSet


def to_digraph(subject: Union[SigmaSet, Automaton, PointedAutomaton], name: str = "automaton") -> graphviz.Digraph:
    """
    Build a Digraph with one node per state in index order

    Accepting states are double circles and the start state receives an
    arrow from an invisible point. Parallel edges are merged into one edge
    labelled with their symbols in alphabet order.
    """
    start: Optional[int] = None
    accept = frozenset()
    if isinstance(subject, PointedAutomaton):
        start = subject.start
        subject = subject.automaton
    if isinstance(subject, Automaton):
        accept = subject.accept
        carrier = subject.carrier
    else:
        carrier = subject

    g = graphviz.Digraph(name, graph_attr={"rankdir": "LR", "label": f"Σ = {{{','.join(carrier.alphabet)}}}"})
    if start is not None:
        g.node("start", shape="point", style="invis")
    for q, state in enumerate(carrier.states):
        g.node(f"q{q}", label=graphviz.nohtml(state), shape="doublecircle" if q in accept else "circle")
    if start is not None:
        g.edge("start", f"q{start}")

    for q in range(carrier.size):
        grouped = defaultdict(list)
        for i, symbol in enumerate(carrier.alphabet):
            grouped[int(carrier.delta[q, i])].append(symbol)
        for target in sorted(grouped):
            g.edge(f"q{q}", f"q{target}", label=graphviz.nohtml(",".join(grouped[target])))
    return g


def to_dot(subject: Union[SigmaSet, Automaton, PointedAutomaton], name: str = "automaton") -> str:
    """DOT source text; identical input yields identical text"""
    return to_digraph(subject, name).source
