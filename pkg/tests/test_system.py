"""
Test suite for the regular-language witness toolkit: corpora, acceptance
runs and an end-to-end workflow
"""
import unittest
import sys
from pathlib import Path

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent / "src"))

from automata.automaton import PointedAutomaton
from automata.minimization import minimal_automaton
from automata.operations import equivalent
from language.alphabet import Alphabet
from language.equivalence import semantically_equal
from language.parser import parse_regex
from monoids.division import DivisionStatus, divides
from monoids.transition import monoid_recognizes, syntactic_monoid, transition_monoid
from profinite.clopen import ClopenRecognizer, clopen_pullback
from profinite.omega import eval_omega_term, parse_omega_term
from profinite.system import embed_word, join_system
from serialization.json_codec import automaton_from_json, automaton_to_json, dumps, loads
from verification.corpus import (
    brute_force_contains, brute_force_set, mixed_alphabet_corpus, random_corpus,
)
from verification.criteria import AcceptanceRunner, VerificationSettings, summarize


class TestCorpus(unittest.TestCase):
    """Test seeded corpora and the brute-force membership oracle"""

    def setUp(self):
        self.alphabet = Alphabet.from_string("ab")

    def test_same_seed_same_corpus(self):
        """Test identical seeds give identical corpora"""
        first = random_corpus(20, self.alphabet, 4, seed=7)
        second = random_corpus(20, self.alphabet, 4, seed=7)
        self.assertEqual(first, second)
        self.assertEqual(len(first), 20)

    def test_mixed_alphabets(self):
        """Test mixed corpora stay within the first three symbols"""
        for language in mixed_alphabet_corpus(15, 3, 3, seed=3):
            self.assertTrue(1 <= len(language.alphabet) <= 3)
            self.assertTrue(set(language.alphabet.symbols) <= {"a", "b", "c"})

    def test_oracle_agrees_on_known_languages(self):
        """Test split-based membership on hand-written regexes"""
        language = parse_regex("(ab)*", self.alphabet)
        self.assertEqual(brute_force_set(language, 4), frozenset({"", "ab", "abab"}))
        odd = parse_regex("a*&!(aa)*", self.alphabet)
        self.assertTrue(brute_force_contains(odd.ast, "aaa"))
        self.assertFalse(brute_force_contains(odd.ast, "aaaa"))


class TestAcceptanceRunner(unittest.TestCase):
    """Test the acceptance criteria at reduced sizes"""

    def setUp(self):
        self.settings = VerificationSettings(
            corpus_size=6,
            bridge_corpus_size=4,
            max_depth=3,
            sample_max_length=3,
            random_sigma_sets=5,
            moore_samples=20,
            anbn_bound=20,
            terminal_max_states=2,
            seed=11,
            progress=False,
        )

    def test_all_criteria_pass(self):
        """Test every criterion passes on a small corpus"""
        results = AcceptanceRunner(self.settings).run()
        self.assertEqual([r.number for r in results], list(range(1, 11)))
        for result in results:
            self.assertTrue(result.passed, f"{result.name}: {result.failures}")
            self.assertGreater(result.checked, 0, result.name)

    def test_selected_criteria(self):
        """Test running a subset in numeric order"""
        results = AcceptanceRunner(self.settings).run([10, 1])
        self.assertEqual([r.number for r in results], [1, 10])
        with self.assertRaises(ValueError):
            AcceptanceRunner(self.settings).run([11])

    def test_omega_law_sees_collected_monoids(self):
        """Test criterion 9 checks monoids built by earlier criteria"""
        results = AcceptanceRunner(self.settings).run([5, 9])
        self.assertEqual(results[1].checked, self.settings.random_sigma_sets)

    def test_summary_table(self):
        """Test the summary has one row per criterion and no timing by default"""
        results = AcceptanceRunner(self.settings).run([1, 10])
        summary = summarize(results)
        self.assertEqual(list(summary["criterion"]), [1, 10])
        self.assertNotIn("seconds", summary.columns)
        self.assertIn("seconds", summarize(results, include_timing=True).columns)


class TestEndToEnd(unittest.TestCase):
    """Test a regex travelling through every representation"""

    def setUp(self):
        self.alphabet = Alphabet.from_string("ab")

    def test_regex_to_clopen_and_back(self):
        """Test regex → DFA file → transition monoid → clopen → regex"""
        language = parse_regex("(a|b)*a(a|b)*", self.alphabet)
        loaded = automaton_from_json(loads(dumps(automaton_to_json(minimal_automaton(language)))))
        self.assertIsInstance(loaded, PointedAutomaton)
        sigma_monoid = transition_monoid(loaded.carrier)
        self.assertEqual(sigma_monoid.size, 2)

        recognizer = syntactic_monoid(language)
        self.assertTrue(monoid_recognizes(recognizer, language))
        pulled = clopen_pullback(ClopenRecognizer.from_recognizer(recognizer))
        self.assertTrue(semantically_equal(pulled, language))
        self.assertTrue(equivalent(minimal_automaton(pulled), loaded))

    def test_syntactic_monoid_divides_host(self):
        """Test the syntactic monoid divides the transition monoid of a larger automaton"""
        recognizer = syntactic_monoid(parse_regex("(aa)*", self.alphabet))
        host = transition_monoid(minimal_automaton(parse_regex("(aaaa)*", self.alphabet)).carrier).monoid
        self.assertEqual(divides(recognizer.monoid, host).status, DivisionStatus.DIVIDES)

    def test_profinite_view_of_two_languages(self):
        """Test words and ω-terms seen through the join of two syntactic monoids"""
        first = syntactic_monoid(parse_regex("(ab)*", self.alphabet)).sigma_monoid
        second = syntactic_monoid(parse_regex("a*b*", self.alphabet)).sigma_monoid
        system = join_system(first, second)
        for word in self.alphabet.words(4):
            self.assertTrue(embed_word(system, word).is_compatible())
        approx = eval_omega_term(system, parse_omega_term("(ab)^w", self.alphabet))
        self.assertTrue(approx.is_compatible())
        self.assertEqual(system.nodes[1].monoid.name(approx.components[1]), "ab")


if __name__ == '__main__':
    unittest.main()
