"""
The four witnesses of regularity for a language and their cross-check
"""
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent))

from automata.automaton import PointedAutomaton
from automata.minimization import RegularityResult, is_regular, minimal_automaton
from automata.operations import equivalent
from language.alphabet import Alphabet
from language.parser import parse_regex
from language.regex import Language
from monoids.monoid import MonoidRecognizer, sigma_monoid_isomorphism
from monoids.transition import monoid_recognizes, syntactic_recognizer, transition_monoid
from profinite.clopen import ClopenRecognizer, clopen_pullback
from sigma_sets.orbits import language_presentation
from utils.config import VERIFICATION_CONFIG
from utils.helpers import format_word, setup_logging, timing_decorator

logger = setup_logging(__name__)

CLAUSES = ("nerode-count", "monoid-recognition", "clopen-pullback", "transition-monoid", "sample-agreement")


@dataclass(frozen=True)
class FourWitnesses:
    """Nerode data, minimal automaton, syntactic monoid and syntactic clopen"""
    nerode: RegularityResult
    dfa: PointedAutomaton
    monoid: MonoidRecognizer
    clopen: ClopenRecognizer


@timing_decorator
def four_witnesses(language: Language) -> FourWitnesses:
    """Build all four witnesses of regularity for a regex language"""
    nerode = is_regular(language_presentation(language))
    dfa = minimal_automaton(language)
    monoid = syntactic_recognizer(dfa)
    return FourWitnesses(nerode, dfa, monoid, ClopenRecognizer.from_recognizer(monoid))


@dataclass(frozen=True)
class ClauseResult:
    name: str
    passed: bool
    witness: Optional[str] = None

    def to_dict(self) -> Dict:
        entry = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            entry["witness"] = self.witness
        return entry


@dataclass(frozen=True)
class BridgeReport:
    """Outcome of every bridge clause for one language"""
    language: str
    clauses: Tuple[ClauseResult, ...]

    @property
    def passed(self) -> bool:
        return all(clause.passed for clause in self.clauses)

    def failed(self) -> List[ClauseResult]:
        return [clause for clause in self.clauses if not clause.passed]

    def to_dict(self) -> Dict:
        return {"language": self.language, "clauses": [clause.to_dict() for clause in self.clauses]}

    def render_text(self) -> str:
        lines = [f"bridge report for {self.language}"]
        for clause in self.clauses:
            status = "PASS" if clause.passed else "FAIL"
            line = f"  [{status}] {clause.name}"
            if clause.witness is not None:
                line += f" (witness: {clause.witness})"
            lines.append(line)
        lines.append("all clauses pass" if self.passed else f"{len(self.failed())} clause(s) failed")
        return "\n".join(lines)


def _nerode_clause(witnesses: FourWitnesses) -> ClauseResult:
    nerode = witnesses.nerode
    if not nerode.is_regular:
        return ClauseResult(CLAUSES[0], False, f"orbit exceeded bound {nerode.bound_hit}")
    if nerode.nerode_class_count != witnesses.dfa.size:
        return ClauseResult(CLAUSES[0], False,
                            f"{nerode.nerode_class_count} classes vs {witnesses.dfa.size} states")
    return ClauseResult(CLAUSES[0], True)


def _monoid_clause(witnesses: FourWitnesses, language: Language) -> ClauseResult:
    result = monoid_recognizes(witnesses.monoid, language)
    return ClauseResult(CLAUSES[1], result.equivalent,
                        None if result.equivalent else format_word(result.counterexample))


def _clopen_clause(witnesses: FourWitnesses, reference: PointedAutomaton) -> ClauseResult:
    pullback = clopen_pullback(witnesses.clopen)
    result = equivalent(minimal_automaton(pullback), reference)
    return ClauseResult(CLAUSES[2], result.equivalent,
                        None if result.equivalent else format_word(result.counterexample))


def _transition_clause(witnesses: FourWitnesses) -> ClauseResult:
    result = sigma_monoid_isomorphism(transition_monoid(witnesses.dfa.carrier), witnesses.monoid.sigma_monoid)
    return ClauseResult(CLAUSES[3], result.isomorphic, None if result.isomorphic else format_word(result.witness))


def _sample_clause(witnesses: FourWitnesses, language: Language, max_length: int) -> ClauseResult:
    nerode = witnesses.nerode.minimal
    for word in language.alphabet.words(max_length):
        answers = {
            language.contains(word),
            witnesses.dfa.accepts(word),
            witnesses.monoid.accepts(word),
            witnesses.clopen.contains_word(word),
        }
        if nerode is not None:
            answers.add(nerode.accepts(word))
        if len(answers) > 1:
            return ClauseResult(CLAUSES[4], False, format_word(word))
    return ClauseResult(CLAUSES[4], True)


@timing_decorator
def verify_bridge(witnesses: FourWitnesses, language: Language,
                  max_length: Optional[int] = None) -> BridgeReport:
    """
    Cross-check four witnesses against a language

    Args:
        witnesses: Witnesses to check, possibly built for another language
        language: The language they should all recognize
        max_length: Longest word of the membership sample; defaults to
            VERIFICATION_CONFIG

    Returns:
        BridgeReport: one clause per check, each failing clause with a witness
        word, state count or element
    """
    max_length = VERIFICATION_CONFIG["sample_max_length"] if max_length is None else max_length
    reference = minimal_automaton(language)
    clauses = (
        _nerode_clause(witnesses),
        _monoid_clause(witnesses, language),
        _clopen_clause(witnesses, reference),
        _transition_clause(witnesses),
        _sample_clause(witnesses, language, max_length),
    )
    report = BridgeReport(str(language), clauses)
    if not report.passed:
        logger.info(f"bridge failed for {language}: {[c.name for c in report.failed()]}")
    return report


def demo_bridge():
    """Build and cross-check the four witnesses for a few languages"""
    print("=== REGULARITY BRIDGE DEMO ===\n")
    alphabet = Alphabet.from_string("ab")
    for text in ("∅", "(ab)*", "(a|b)*a(a|b)*", "a*&!(aa)*"):
        try:
            language = parse_regex(text, alphabet)
            witnesses = four_witnesses(language)
            print(f"{text}: {witnesses.nerode}, {witnesses.dfa.size}-state DFA, "
                  f"{witnesses.monoid.sigma_monoid.size}-element monoid")
            print(verify_bridge(witnesses, language).render_text())
            print()
        except Exception as e:
            print(f"Error in demo: {str(e)}")


if __name__ == "__main__":
    demo_bridge()
