"""
Batch acceptance runs: each criterion checks one cross-module law over a
seeded corpus and reports counts
"""
import itertools
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd
from tqdm import tqdm

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from automata.automaton import Automaton
from automata.minimization import derivative_automaton, is_regular, minimal_automaton, minimize
from automata.operations import isomorphic
from automata.recognition import recognition_law_violation, recognition_map
from bridge.witnesses import four_witnesses, verify_bridge
from language.alphabet import Alphabet
from language.equivalence import LanguageStateSpace, semantically_equal
from language.regex import Language
from monoids.division import DivisionStatus, divides
from monoids.monoid import FiniteMonoid, idempotent_power
from monoids.transition import covering_morphism, monoid_recognizes, syntactic_monoid, transition_monoid
from profinite.clopen import ClopenRecognizer, clopen_pullback
from sigma_sets.orbits import counter_presentation, language_presentation, orbit
from sigma_sets.sigma_set import SigmaSet, check_morphism, moore_run
from utils.config import VERIFICATION_CONFIG
from utils.helpers import setup_logging, timing_decorator

from .corpus import brute_force_contains, make_rng, mixed_alphabet_corpus, random_corpus, random_sigma_set

logger = setup_logging(__name__)


@dataclass
class CriterionResult:
    """Counts for one criterion; unknown counts checks skipped by a budget"""
    number: int
    name: str
    checked: int = 0
    failed: int = 0
    unknown: int = 0
    seconds: float = 0.0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def fail(self, detail: str):
        self.failed += 1
        if len(self.failures) < 10:
            self.failures.append(detail)


@dataclass
class VerificationSettings:
    """Sizes for one acceptance run; defaults come from VERIFICATION_CONFIG"""
    corpus_size: int = VERIFICATION_CONFIG["corpus_size"]
    bridge_corpus_size: int = VERIFICATION_CONFIG["bridge_corpus_size"]
    max_depth: int = VERIFICATION_CONFIG["max_depth"]
    sample_max_length: int = VERIFICATION_CONFIG["sample_max_length"]
    random_sigma_sets: int = VERIFICATION_CONFIG["random_sigma_sets"]
    moore_samples: int = VERIFICATION_CONFIG["moore_samples"]
    anbn_bound: int = VERIFICATION_CONFIG["anbn_bound"]
    terminal_max_states: int = 3
    divides_budget: Optional[int] = None
    seed: int = VERIFICATION_CONFIG["seed"]
    progress: bool = True


class AcceptanceRunner:
    """
    Runs the acceptance criteria over shared seeded corpora

    Monoids built by the covering, recognition, clopen and bridge criteria
    are collected and checked for the ω-power law by criterion 9.
    """

    def __init__(self, settings: Optional[VerificationSettings] = None):
        self.settings = settings or VerificationSettings()
        self.logger = setup_logging(__name__)
        self.alphabet = Alphabet("ab")
        self._corpus: Optional[List[Language]] = None
        self.monoids: List[FiniteMonoid] = []

    @property
    def corpus(self) -> List[Language]:
        if self._corpus is None:
            self._corpus = random_corpus(self.settings.corpus_size, self.alphabet,
                                         self.settings.max_depth, self.settings.seed)
        return self._corpus

    def _progress(self, items: Iterable, description: str):
        return tqdm(items, desc=description, disable=not self.settings.progress, leave=False)

    def derivative_oracle(self) -> CriterionResult:
        """contains() agrees with split-based membership on all short words"""
        result = CriterionResult(1, "derivative-oracle")
        words = list(self.alphabet.words(self.settings.sample_max_length))
        for language in self._progress(self.corpus, "derivatives"):
            result.checked += 1
            for word in words:
                if language.contains(word) != brute_force_contains(language.ast, word):
                    result.fail(f"{language} on {word!r}")
                    break
        return result

    def two_route_minimality(self) -> CriterionResult:
        """Semantic-merge minimal automaton ≅ refinement of the structural derivative automaton"""
        result = CriterionResult(2, "two-route-minimality")
        for language in self._progress(self.corpus, "minimality"):
            result.checked += 1
            if not isomorphic(minimal_automaton(language), minimize(derivative_automaton(language))):
                result.fail(str(language))
        return result

    def myhill_nerode(self) -> CriterionResult:
        """Nerode class counts match minimal automata; the counter language overflows its bound"""
        result = CriterionResult(3, "myhill-nerode")
        for language in self._progress(self.corpus, "nerode"):
            result.checked += 1
            nerode = is_regular(language_presentation(language))
            if not nerode.is_regular or nerode.nerode_class_count != minimal_automaton(language).size:
                result.fail(str(language))

        presentation = counter_presentation()
        bound = self.settings.anbn_bound
        explored = orbit(presentation.sigma_set, presentation.state, bound)
        verdict = is_regular(presentation, bound)
        result.checked += 1
        if explored.is_finite or explored.visited < bound + 1 or verdict.is_regular:
            result.fail(f"counter presentation: {explored}, {verdict}")
        return result

    def terminal_object_laws(self) -> CriterionResult:
        """Recognition laws and injectivity of F ↦ (q ↦ L_q) on every small automaton"""
        result = CriterionResult(4, "terminal-object-laws")
        alphabet = self.alphabet
        samples = list(alphabet.words(4))
        carriers = []
        for n in range(1, self.settings.terminal_max_states + 1):
            for targets in itertools.product(range(n), repeat=n * len(alphabet)):
                carriers.append(SigmaSet([f"q{i}" for i in range(n)], np.array(targets), alphabet))

        for carrier in self._progress(carriers, "terminal laws"):
            space = LanguageStateSpace(alphabet)
            families = set()
            for size in range(carrier.size + 1):
                for accept in itertools.combinations(range(carrier.size), size):
                    automaton = Automaton(carrier, frozenset(accept))
                    result.checked += 1
                    family = recognition_map(automaton)
                    violation = recognition_law_violation(automaton, samples, language_of=lambda _: family)
                    if violation is not None:
                        result.fail(f"{carrier.table()} F={sorted(accept)}: {violation}")
                    families.add(tuple(space.canonical_node(language.ast) for language in family))
            if len(families) != 2 ** carrier.size:
                result.fail(f"{carrier.table()}: recognition families are not injective")
        return result

    def monoid_covering(self) -> CriterionResult:
        """φ ↦ φ(q₀) is equivariant and hits q₀"""
        result = CriterionResult(5, "monoid-covering")
        rng = make_rng(self.settings.seed)
        for _ in self._progress(range(self.settings.random_sigma_sets), "covering"):
            carrier = random_sigma_set(rng, self.alphabet, 4)
            q0 = int(rng.integers(carrier.size))
            cover = covering_morphism(carrier, q0)
            self.monoids.append(transition_monoid(carrier).monoid)
            result.checked += 1
            if not check_morphism(cover) or cover.mapping[0] != q0:
                result.fail(f"{carrier.table()} from {carrier.states[q0]}")
        return result

    def recognition_round_trip(self) -> CriterionResult:
        """Syntactic monoids recognize their language and divide recognizing transition monoids"""
        result = CriterionResult(6, "recognition-round-trip")
        for language in self._progress(self.corpus, "recognition"):
            result.checked += 1
            recognizer = syntactic_monoid(language)
            self.monoids.append(recognizer.monoid)
            recognized = monoid_recognizes(recognizer, language)
            if not recognized:
                result.fail(f"{language}: counterexample {recognized.counterexample!r}")
                continue
            automaton = derivative_automaton(language)
            host = transition_monoid(automaton.carrier).monoid
            division = divides(recognizer.monoid, host, self.settings.divides_budget)
            if division.status is DivisionStatus.UNKNOWN:
                result.unknown += 1
            elif division.status is DivisionStatus.DOES_NOT_DIVIDE:
                result.fail(f"{language}: syntactic monoid does not divide the transition monoid")
        return result

    def clopen_round_trip(self) -> CriterionResult:
        """Pullback of the syntactic clopen is the language itself"""
        result = CriterionResult(7, "clopen-round-trip")
        for language in self._progress(self.corpus, "clopens"):
            result.checked += 1
            recognizer = syntactic_monoid(language)
            self.monoids.append(recognizer.monoid)
            if not semantically_equal(clopen_pullback(ClopenRecognizer.from_recognizer(recognizer)), language):
                result.fail(str(language))
        return result

    def bridge(self) -> CriterionResult:
        """All bridge clauses pass on languages over alphabets of up to three symbols"""
        result = CriterionResult(8, "bridge")
        corpus = mixed_alphabet_corpus(self.settings.bridge_corpus_size, 3, self.settings.max_depth,
                                       self.settings.seed)
        for language in self._progress(corpus, "bridge"):
            result.checked += 1
            witnesses = four_witnesses(language)
            self.monoids.append(witnesses.monoid.monoid)
            report = verify_bridge(witnesses, language, self.settings.sample_max_length)
            if not report.passed:
                result.fail(f"{language}: {[c.name for c in report.failed()]}")
        return result

    def omega_power_law(self) -> CriterionResult:
        """(x^ω)² = x^ω for every element of every collected monoid"""
        result = CriterionResult(9, "omega-power-law")
        for monoid in self._progress(self.monoids, "ω-powers"):
            result.checked += 1
            for x in range(monoid.size):
                power = idempotent_power(monoid, x)
                if not monoid.is_idempotent(power):
                    result.fail(f"monoid of size {monoid.size}, element {x}")
                    break
        return result

    def moore_adjunction(self) -> CriterionResult:
        """g♭(q)(uv) = g♭(q·u)(v) on random Σ-sets, states and words"""
        result = CriterionResult(10, "moore-adjunction")
        rng = make_rng(self.settings.seed + 10)
        symbols = self.alphabet.symbols
        for _ in self._progress(range(self.settings.moore_samples), "moore"):
            carrier = random_sigma_set(rng, self.alphabet, 5)
            q = int(rng.integers(carrier.size))
            u = "".join(rng.choice(list(symbols), size=int(rng.integers(0, 5))))
            v = "".join(rng.choice(list(symbols), size=int(rng.integers(0, 5))))
            result.checked += 1
            if moore_run(carrier, str, q, u + v) != moore_run(carrier, str, carrier.run(q, u), v):
                result.fail(f"{carrier.table()} q={q} u={u!r} v={v!r}")
        return result

    def criteria(self) -> Dict[int, Callable[[], CriterionResult]]:
        return {
            1: self.derivative_oracle,
            2: self.two_route_minimality,
            3: self.myhill_nerode,
            4: self.terminal_object_laws,
            5: self.monoid_covering,
            6: self.recognition_round_trip,
            7: self.clopen_round_trip,
            8: self.bridge,
            9: self.omega_power_law,
            10: self.moore_adjunction,
        }

    @timing_decorator
    def run(self, selected: Optional[Sequence[int]] = None) -> List[CriterionResult]:
        """Run criteria in numeric order; criterion 9 sees monoids from those run before it"""
        available = self.criteria()
        numbers = sorted(selected) if selected else sorted(available)
        unknown = [n for n in numbers if n not in available]
        if unknown:
            raise ValueError(f"unknown criteria {unknown}; expected numbers 1-10")
        results = []
        for number in numbers:
            started = time.time()
            outcome = available[number]()
            outcome.seconds = time.time() - started
            self.logger.info(f"criterion {number} ({outcome.name}): {outcome.checked} checked, "
                             f"{outcome.failed} failed, {outcome.unknown} unknown")
            results.append(outcome)
        return results


def summarize(results: Sequence[CriterionResult], include_timing: bool = False) -> pd.DataFrame:
    """One row per criterion; timings are opt-in so summaries stay reproducible"""
    columns = ["criterion", "name", "checked", "failed", "unknown", "passed"] + (["seconds"] if include_timing else [])
    return pd.DataFrame(
        [
            {
                "criterion": r.number,
                "name": r.name,
                "checked": r.checked,
                "failed": r.failed,
                "unknown": r.unknown,
                "passed": r.passed,
                "seconds": round(r.seconds, 2),
            }
            for r in results
        ],
        columns=columns,
    )
