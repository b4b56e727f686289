"""
Tests for finite monoids, transition and syntactic monoids, and division
"""
import unittest
import sys
from pathlib import Path

import pandas as pd

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent / "src"))

from automata.minimization import minimal_automaton
from language.alphabet import Alphabet
from language.parser import parse_regex
from monoids.division import DivisionStatus, divides
from monoids.monoid import (
    MonoidRecognizer, SigmaMonoid, as_sigma_set, associativity_violation, cayley_table,
    check_sigma_monoid_morphism, cyclic_group, generated_submonoid, homomorphism_violation,
    idempotent_power, is_monoid_homomorphism, make_monoid, render_cayley_table,
    sigma_monoid_isomorphism, sigma_monoid_morphism_violation, trivial_monoid,
)
from monoids.transition import (
    covering_morphism, monoid_recognizes, recognizer_automaton, syntactic_monoid, transition_monoid,
)
from sigma_sets.sigma_set import check_morphism, make_sigma_set, sigma_set_from_function
from utils.errors import AlphabetError, AssociativityError, IdentityError, MonoidTableError, MorphismError


class TestFiniteMonoid(unittest.TestCase):
    """Test table validation and element arithmetic"""

    def test_cyclic_group(self):
        """Test Z4 multiplication, powers and names"""
        z4 = cyclic_group(4)
        self.assertEqual(z4.multiply(3, 2), 1)
        self.assertEqual(z4.power(1, 3), 3)
        self.assertEqual(z4.product([1, 1, 1, 1]), 0)
        self.assertEqual(z4.element_names, ("0", "1", "2", "3"))

    def test_not_square(self):
        """Test malformed tables are rejected"""
        with self.assertRaises(MonoidTableError):
            make_monoid([[0, 1]], 0)
        with self.assertRaises(MonoidTableError):
            make_monoid([[0, 5], [1, 0]], 0)

    def test_identity_error(self):
        """Test a declared identity that is not a unit"""
        with self.assertRaises(IdentityError) as ctx:
            make_monoid([[0, 1], [1, 0]], 1)
        self.assertEqual(ctx.exception.identity, 1)

    def test_associativity_error(self):
        """Test a non-associative table reports its failing triple"""
        table = [[0, 1, 2], [1, 2, 1], [2, 2, 1]]
        with self.assertRaises(AssociativityError) as ctx:
            make_monoid(table, 0)
        self.assertEqual(ctx.exception.triple, (1, 1, 1))
        self.assertIsInstance(ctx.exception, MonoidTableError)

    def test_spot_checked_associativity(self):
        """Test large tables are sampled rather than checked exhaustively"""
        z4 = cyclic_group(4)
        self.assertIsNone(associativity_violation(z4.table, exhaustive_limit=2, spot_checks=50))

    def test_duplicate_names(self):
        """Test element names must be unique"""
        with self.assertRaises(MonoidTableError):
            make_monoid([[0, 1], [1, 0]], 0, ["x", "x"])

    def test_idempotent_power(self):
        """Test x^ω is the unique idempotent power"""
        z4 = cyclic_group(4)
        self.assertEqual(idempotent_power(z4, 1), 0)
        # {1, a, a²} with a³ = a²: the idempotent power of a is a²
        aperiodic = make_monoid([[0, 1, 2], [1, 2, 2], [2, 2, 2]], 0, ["1", "a", "aa"])
        self.assertEqual(idempotent_power(aperiodic, 1), 2)
        for monoid in (z4, aperiodic, trivial_monoid()):
            for x in range(monoid.size):
                self.assertTrue(monoid.is_idempotent(idempotent_power(monoid, x)))

    def test_generated_submonoid(self):
        """Test closure of a generating set from the identity"""
        z4 = cyclic_group(4)
        self.assertEqual(generated_submonoid(z4, [2]), [0, 2])
        self.assertEqual(generated_submonoid(z4, []), [0])
        self.assertEqual(sorted(generated_submonoid(z4, [3])), [0, 1, 2, 3])

    def test_homomorphisms(self):
        """Test reduction mod 2 and two non-homomorphisms"""
        z4, z2 = cyclic_group(4), cyclic_group(2)
        self.assertTrue(is_monoid_homomorphism((0, 1, 0, 1), z4, z2))
        self.assertEqual(homomorphism_violation((0, 1, 1, 0), z4, z2), (1, 1))
        self.assertEqual(homomorphism_violation((1, 0, 1, 0), z4, z2), (0, 0))
        with self.assertRaises(MorphismError):
            homomorphism_violation((0, 1), z4, z2)

    def test_cayley_table(self):
        """Test the labelled multiplication table"""
        frame = cayley_table(cyclic_group(2))
        self.assertIsInstance(frame, pd.DataFrame)
        self.assertEqual(frame.shape, (2, 2))
        self.assertEqual(frame.loc["1", "1"], "0")
        self.assertIn("0", render_cayley_table(cyclic_group(2)))


class TestSigmaMonoid(unittest.TestCase):
    """Test Σ-monoids, recognizers and their morphisms"""

    def setUp(self):
        self.alphabet = Alphabet.from_string("a")
        self.z4 = SigmaMonoid(cyclic_group(4), {"a": 1}, self.alphabet)
        self.z2 = SigmaMonoid(cyclic_group(2), {"a": 1}, self.alphabet)

    def test_hom(self):
        """Test words are evaluated through the generators"""
        self.assertEqual(self.z4.hom(""), 0)
        self.assertEqual(self.z4.hom("aaaaa"), 1)
        self.assertTrue(self.z4.is_generated())
        with self.assertRaises(AlphabetError):
            self.z4.hom("b")

    def test_generator_errors(self):
        """Test generators must cover exactly the alphabet"""
        with self.assertRaises(MorphismError):
            SigmaMonoid(cyclic_group(2), {}, self.alphabet)
        with self.assertRaises(MorphismError):
            SigmaMonoid(cyclic_group(2), {"a": 1, "b": 0}, self.alphabet)
        with self.assertRaises(MorphismError):
            SigmaMonoid(cyclic_group(2), {"a": 2}, self.alphabet)

    def test_recognizer(self):
        """Test hom⁻¹(S) membership for even-length words"""
        even = MonoidRecognizer(self.z2, frozenset({0}))
        self.assertTrue(even.accepts("aa"))
        self.assertFalse(even.accepts("aaa"))

    def test_sigma_monoid_morphisms(self):
        """Test f(x·m_a) = f(x)·m′_a"""
        self.assertTrue(check_sigma_monoid_morphism((0, 1, 0, 1), self.z4, self.z2))
        self.assertEqual(sigma_monoid_morphism_violation((0, 0, 0, 0), self.z4, self.z2), (0, "a"))

    def test_as_sigma_set(self):
        """Test right multiplication by generators as a Σ-set"""
        carrier = as_sigma_set(self.z4)
        self.assertEqual(carrier.states, ("0", "1", "2", "3"))
        self.assertEqual(carrier.run("0", "aaa"), 3)

    def test_isomorphism_search(self):
        """Test generator-preserving isomorphisms and their witnesses"""
        again = SigmaMonoid(cyclic_group(2), {"a": 1}, self.alphabet)
        result = sigma_monoid_isomorphism(self.z2, again)
        self.assertTrue(result.isomorphic)
        self.assertEqual(result.mapping, (0, 1))
        collapsed = SigmaMonoid(cyclic_group(2), {"a": 0}, self.alphabet)
        result = sigma_monoid_isomorphism(self.z2, collapsed)
        self.assertFalse(result.isomorphic)
        self.assertEqual(result.witness, "a")
        self.assertFalse(sigma_monoid_isomorphism(self.z4, self.z2).isomorphic)


class TestTransitionMonoid(unittest.TestCase):
    """Test transition monoids and syntactic monoids"""

    def setUp(self):
        self.alphabet = Alphabet.from_string("ab")

    def parse(self, text):
        return parse_regex(text, self.alphabet)

    def test_parity_monoid(self):
        """Test a toggle and a no-op generate a two-element group"""
        table = {"e": {"a": "o", "b": "e"}, "o": {"a": "e", "b": "o"}}
        sigma_monoid = transition_monoid(make_sigma_set(["e", "o"], table, self.alphabet))
        self.assertEqual(sigma_monoid.size, 2)
        self.assertEqual(sigma_monoid.monoid.element_names, ("ε", "a"))
        self.assertEqual(sigma_monoid.generators, {"a": 1, "b": 0})
        self.assertEqual(sigma_monoid.transformations, ((0, 1), (1, 0)))

    def test_syntactic_monoid_of_ab_star(self):
        """Test the six-element syntactic monoid of (ab)*"""
        recognizer = syntactic_monoid(self.parse("(ab)*"))
        monoid = recognizer.monoid
        self.assertEqual(monoid.element_names, ("ε", "a", "b", "aa", "ab", "ba"))
        self.assertEqual(recognizer.accepting, frozenset({0, 4}))
        self.assertEqual(monoid.multiply(1, 2), 4)  # a·b = ab
        self.assertEqual(monoid.multiply(2, 1), 5)  # b·a = ba
        self.assertEqual(monoid.multiply(1, 1), 3)  # a·a = aa, the zero
        self.assertEqual(recognizer.hom("abab"), 4)

    def test_hom_respects_concatenation(self):
        """Test hom(uv) = hom(u)·hom(v) in diagrammatic order"""
        sigma_monoid = syntactic_monoid(self.parse("a*b|ba")).sigma_monoid
        for u in self.alphabet.words(3):
            for v in self.alphabet.words(3):
                self.assertEqual(sigma_monoid.hom(u + v),
                                 sigma_monoid.monoid.multiply(sigma_monoid.hom(u), sigma_monoid.hom(v)))

    def test_recognizes_own_language(self):
        """Test the syntactic monoid recognizes its language and no other"""
        for text in ("(ab)*", "a*b*", "(a|b)*a(a|b)*", "∅", "a*&!(aa)*"):
            language = self.parse(text)
            self.assertTrue(monoid_recognizes(syntactic_monoid(language), language).equivalent, text)
        mismatch = monoid_recognizes(syntactic_monoid(self.parse("(ab)*")), self.parse("(ba)*"))
        self.assertFalse(mismatch.equivalent)
        self.assertEqual(mismatch.counterexample, "ab")

    def test_recognizer_automaton(self):
        """Test the automaton on monoid elements starts at the identity"""
        pointed = recognizer_automaton(syntactic_monoid(self.parse("(ab)*")))
        self.assertEqual(pointed.start, 0)
        self.assertTrue(pointed.accepts("abab"))
        self.assertFalse(pointed.accepts("aba"))

    def test_covering_morphism(self):
        """Test φ ↦ φ(q₀) is equivariant and hits q₀"""
        mod3 = sigma_set_from_function(range(3), lambda n, s: (n + 1) % 3 if s == "a" else 0, self.alphabet)
        for start in range(3):
            f = covering_morphism(mod3, start)
            self.assertTrue(check_morphism(f))
            self.assertEqual(f(0), start)

    def test_transition_monoid_of_minimal_dfa(self):
        """Test the transition monoid of the minimal DFA is isomorphic to the syntactic monoid"""
        language = self.parse("a*b*")
        dfa = minimal_automaton(language)
        result = sigma_monoid_isomorphism(transition_monoid(dfa.carrier), syntactic_monoid(language).sigma_monoid)
        self.assertTrue(result.isomorphic)


class TestDivision(unittest.TestCase):
    """Test the exhaustive division search"""

    def test_cyclic_divisors(self):
        """Test Z2 divides Z4 but Z3 and Z4 do not divide smaller groups"""
        result = divides(cyclic_group(2), cyclic_group(4))
        self.assertTrue(result.divides)
        self.assertEqual(result.status, DivisionStatus.DIVIDES)
        self.assertEqual(len(set(result.mapping.values())), 2)
        self.assertFalse(divides(cyclic_group(3), cyclic_group(4)).divides)
        self.assertFalse(divides(cyclic_group(4), cyclic_group(2)).divides)

    def test_trivial_divides_everything(self):
        """Test the trivial monoid divides any monoid, whatever the budget"""
        self.assertTrue(divides(trivial_monoid(), cyclic_group(20)).divides)

    def test_submonoid_division(self):
        """Test a divisor found in a proper submonoid"""
        # {1, a, a²} with a³ = a² contains the two-element semilattice {1, a²}
        aperiodic = make_monoid([[0, 1, 2], [1, 2, 2], [2, 2, 2]], 0)
        semilattice = make_monoid([[0, 1], [1, 1]], 0)
        self.assertTrue(divides(semilattice, aperiodic).divides)
        self.assertFalse(divides(cyclic_group(2), aperiodic).divides)

    def test_budget(self):
        """Test searches beyond the budget are reported unknown"""
        result = divides(cyclic_group(2), cyclic_group(9), budget=8)
        self.assertEqual(result.status, DivisionStatus.UNKNOWN)
        self.assertIsNone(result.divides)


if __name__ == '__main__':
    unittest.main()
