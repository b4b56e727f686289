"""
Tests for finite Σ-sets, their constructions and orbit exploration
"""
import unittest
import sys
from pathlib import Path

import numpy as np

# Add src to path to import our modules
sys.path.append(str(Path(__file__).parent.parent / "src"))

from automata.minimization import minimal_automaton
from language.alphabet import Alphabet
from language.parser import parse_regex
from sigma_sets.orbits import (
    LazySigmaSet, counter_presentation, derivative_sigma_set, inclusion_morphism, is_orbit_finite,
    language_presentation,
    maximal_orbit_finite_part, orbit, resolve_bound,
)
from sigma_sets.sigma_set import (
    SigmaSet, SigmaSetMorphism, check_morphism, compose, congruence_closure, congruence_violation,
    coproduct, coproduct_injections, copairing, equivariance_violation, identity_morphism,
    make_sigma_set, moore_behaviour, moore_output_from_behaviour, moore_run, pairing, product,
    product_projections, quotient, quotient_map, sigma_set_from_function, terminal_sigma_set, unique_names,
)
from utils.errors import CongruenceError, MorphismError, TransitionTableError
from verification.corpus import random_corpus


def parity_set(alphabet):
    """a toggles the parity, every other symbol keeps it"""
    table = {"even": {s: ("odd" if s == "a" else "even") for s in alphabet},
             "odd": {s: ("even" if s == "a" else "odd") for s in alphabet}}
    return make_sigma_set(["even", "odd"], table, alphabet)


class TestSigmaSet(unittest.TestCase):
    """Test construction and the word action"""

    def setUp(self):
        self.alphabet = Alphabet.from_string("ab")
        self.parity = parity_set(self.alphabet)

    def test_run(self):
        """Test q·w follows the table symbol by symbol"""
        self.assertEqual(self.parity.run("even", ""), 0)
        self.assertEqual(self.parity.run("even", "ab"), 1)
        self.assertEqual(self.parity.run("even", "aba"), 0)
        self.assertEqual(self.parity.run(1, "bbb"), 1)

    def test_missing_transition(self):
        """Test a partial table is rejected with the offending pair"""
        with self.assertRaises(TransitionTableError) as ctx:
            make_sigma_set(["p"], {"p": {"a": "p"}}, self.alphabet)
        self.assertEqual((ctx.exception.state, ctx.exception.symbol), ("p", "b"))

    def test_dangling_target(self):
        """Test a transition into an unknown state is rejected"""
        with self.assertRaises(TransitionTableError):
            make_sigma_set(["p"], {"p": {"a": "p", "b": "r"}}, self.alphabet)
        with self.assertRaises(TransitionTableError):
            SigmaSet(["p"], [[0, 3]], self.alphabet)

    def test_delta_read_only(self):
        """Test the transition table cannot be mutated"""
        with self.assertRaises(ValueError):
            self.parity.delta[0, 0] = 0

    def test_table_round_trip(self):
        """Test table() rebuilds the same Σ-set"""
        rebuilt = make_sigma_set(self.parity.states, self.parity.table(), self.alphabet)
        self.assertEqual(rebuilt, self.parity)

    def test_from_function(self):
        """Test tabulating a step function over integers"""
        mod3 = sigma_set_from_function(range(3), lambda n, s: (n + 1) % 3 if s == "a" else n, self.alphabet)
        self.assertEqual(mod3.states, ("0", "1", "2"))
        self.assertEqual(mod3.run(0, "aaaa"), 1)

    def test_unique_names(self):
        """Test repeated names receive numbered suffixes"""
        self.assertEqual(unique_names(["x", "y", "x", "x"]), ["x", "y", "x#1", "x#2"])

    def test_unique_names_skip_taken_suffixes(self):
        """Test a suffix already used as a state name is skipped"""
        self.assertEqual(unique_names(["x", "x#1", "x"]), ["x", "x#1", "x#2"])
        self.assertEqual(unique_names(["x", "x", "x#1"]), ["x", "x#2", "x#1"])
        names = unique_names(["a", "a#1", "a", "a#1", "a"])
        self.assertEqual(len(set(names)), len(names))


class TestMorphisms(unittest.TestCase):
    """Test equivariance, composition and universal constructions"""

    def setUp(self):
        self.alphabet = Alphabet.from_string("ab")
        self.parity = parity_set(self.alphabet)
        self.mod4 = sigma_set_from_function(range(4), lambda n, s: (n + 1) % 4 if s == "a" else n,
                                            self.alphabet)

    def test_reduction_mod_two(self):
        """Test n ↦ n mod 2 is equivariant and surjective"""
        f = SigmaSetMorphism(self.mod4, self.parity, (0, 1, 0, 1))
        self.assertTrue(check_morphism(f))
        self.assertTrue(f.is_surjective())
        self.assertFalse(f.is_injective())

    def test_violation_witness(self):
        """Test a non-equivariant map reports a state and symbol"""
        f = SigmaSetMorphism(self.mod4, self.parity, (0, 0, 0, 0))
        self.assertFalse(check_morphism(f))
        self.assertEqual(equivariance_violation(f), ("0", "a"))

    def test_shape_errors(self):
        """Test mappings of the wrong length or range are rejected"""
        with self.assertRaises(MorphismError):
            SigmaSetMorphism(self.mod4, self.parity, (0, 1))
        with self.assertRaises(MorphismError):
            SigmaSetMorphism(self.mod4, self.parity, (0, 1, 2, 3))

    def test_compose_with_identity(self):
        """Test identities are units for composition"""
        f = SigmaSetMorphism(self.mod4, self.parity, (0, 1, 0, 1))
        self.assertEqual(compose(identity_morphism(self.mod4), f), f)
        self.assertEqual(compose(f, identity_morphism(self.parity)), f)

    def test_terminal_object(self):
        """Test the constant map to the terminal Σ-set is equivariant"""
        terminal = terminal_sigma_set(self.alphabet)
        f = SigmaSetMorphism(self.mod4, terminal, (0, 0, 0, 0))
        self.assertTrue(check_morphism(f))

    def test_product(self):
        """Test the product acts componentwise with equivariant projections"""
        both = product(self.parity, self.mod4)
        self.assertEqual(both.size, 8)
        self.assertEqual(both.states[both.run("(even,0)", "aaa")], "(odd,3)")
        left, right = product_projections(self.parity, self.mod4)
        self.assertTrue(check_morphism(left))
        self.assertTrue(check_morphism(right))

    def test_pairing(self):
        """Test pairing factors through the projections"""
        f = SigmaSetMorphism(self.mod4, self.parity, (0, 1, 0, 1))
        g = identity_morphism(self.mod4)
        paired = pairing(f, g)
        self.assertTrue(check_morphism(paired))
        left, right = product_projections(self.parity, self.mod4)
        self.assertEqual(compose(paired, left), f)
        self.assertEqual(compose(paired, right), g)

    def test_coproduct(self):
        """Test the coproduct with its injections and copairing"""
        both = coproduct(self.parity, self.mod4)
        self.assertEqual(both.size, 6)
        self.assertEqual(both.states[both.run("inr(0)", "a")], "inr(1)")
        left, right = coproduct_injections(self.parity, self.mod4)
        self.assertTrue(check_morphism(left))
        self.assertTrue(check_morphism(right))
        f = identity_morphism(self.parity)
        g = SigmaSetMorphism(self.mod4, self.parity, (0, 1, 0, 1))
        merged = copairing(f, g)
        self.assertTrue(check_morphism(merged))
        self.assertEqual(compose(right, merged), g)

    def test_mismatched_alphabets(self):
        """Test constructions refuse Σ-sets over different alphabets"""
        other = parity_set(Alphabet.from_string("abc"))
        with self.assertRaises(MorphismError):
            product(self.parity, other)


class TestQuotients(unittest.TestCase):
    """Test congruences and quotient Σ-sets"""

    def setUp(self):
        self.alphabet = Alphabet.from_string("ab")
        self.mod4 = sigma_set_from_function(range(4), lambda n, s: (n + 1) % 4 if s == "a" else n,
                                            self.alphabet)

    def test_quotient_by_parity(self):
        """Test quotienting mod 4 by parity gives two states"""
        f = quotient_map(self.mod4, [["0", "2"], ["1", "3"]])
        self.assertTrue(check_morphism(f))
        self.assertEqual(f.target.states, ("{0,2}", "{1,3}"))
        self.assertEqual(f.mapping, (0, 1, 0, 1))

    def test_non_congruence(self):
        """Test a partition that is not a congruence reports a witness pair"""
        blocks = [["0", "1"], ["2"], ["3"]]
        self.assertEqual(congruence_violation(self.mod4, blocks), (("0", "1"), "a"))
        with self.assertRaises(CongruenceError) as ctx:
            quotient(self.mod4, blocks)
        self.assertEqual(ctx.exception.pair, ("0", "1"))
        self.assertEqual(ctx.exception.symbol, "a")

    def test_not_a_partition(self):
        """Test overlapping or incomplete blocks are rejected"""
        with self.assertRaises(CongruenceError):
            quotient(self.mod4, [["0", "1"], ["1", "2", "3"]])
        with self.assertRaises(CongruenceError):
            quotient(self.mod4, [["0", "1"]])

    def test_congruence_closure(self):
        """Test the least congruence generated by one pair"""
        self.assertEqual(congruence_closure(self.mod4, [("0", "2")]), [["0", "2"], ["1", "3"]])
        self.assertEqual(congruence_closure(self.mod4, [("0", "1")]), [["0", "1", "2", "3"]])
        self.assertEqual(congruence_closure(self.mod4, []), [["0"], ["1"], ["2"], ["3"]])

    def test_closure_is_a_congruence(self):
        """Test the closure can always be used as a quotient"""
        blocks = congruence_closure(self.mod4, [("1", "3")])
        self.assertIsNone(congruence_violation(self.mod4, blocks))
        self.assertEqual(quotient(self.mod4, blocks).size, 2)


class TestMoore(unittest.TestCase):
    """Test the transposed behaviour of an output map"""

    def setUp(self):
        self.alphabet = Alphabet.from_string("ab")
        self.parity = parity_set(self.alphabet)

    def test_behaviour_shifts(self):
        """Test g♭(q)(uv) = g♭(q·u)(v)"""
        for u in self.alphabet.words(3):
            for v in self.alphabet.words(3):
                self.assertEqual(moore_run(self.parity, str, "even", u + v),
                                 moore_run(self.parity, str, self.parity.run("even", u), v))

    def test_behaviour_round_trip(self):
        """Test the output is recovered from the behaviour at ε"""
        behaviour = moore_behaviour(self.parity, lambda name: name == "odd", "odd", 2)
        self.assertEqual(len(behaviour), 7)
        self.assertTrue(moore_output_from_behaviour(behaviour))
        self.assertFalse(behaviour["a"])
        self.assertTrue(behaviour["bb"])


class TestOrbits(unittest.TestCase):
    """Test bounded orbit exploration"""

    def setUp(self):
        self.alphabet = Alphabet.from_string("ab")

    def test_derivative_orbit(self):
        """Test the derivative orbit of (ab)* has three states"""
        presentation = language_presentation(parse_regex("(ab)*", self.alphabet))
        result = orbit(presentation.sigma_set, presentation.state, 100)
        self.assertTrue(result.is_finite)
        self.assertEqual(result.size, 3)
        self.assertEqual(str(result), "Finite(3)")
        self.assertEqual([str(s) for s in result.states], ["(ab)*", "b(ab)*", "∅"])

    def test_counter_exceeds_bound(self):
        """Test the counter presentation visits bound + 1 distinct states"""
        presentation = counter_presentation()
        result = orbit(presentation.sigma_set, presentation.state, 50)
        self.assertFalse(result.is_finite)
        self.assertEqual(result.visited, 51)
        self.assertEqual(str(result), "ExceededBound(51)")

    def test_counter_membership(self):
        """Test the counter presentation accepts exactly aⁿbⁿ"""
        presentation = counter_presentation()
        for word in ("", "ab", "aabb", "aaabbb"):
            self.assertTrue(presentation.contains(word), word)
        for word in ("a", "b", "ba", "aab", "abab", "abb"):
            self.assertFalse(presentation.contains(word), word)

    def test_finite_sigma_set_orbit(self):
        """Test orbits in a finite Σ-set are reported by name"""
        mod4 = sigma_set_from_function(range(4), lambda n, s: (n + 1) % 4 if s == "a" else n, self.alphabet)
        result = orbit(mod4, "2")
        self.assertEqual(result.states, ("2", "3", "0", "1"))
        self.assertTrue(is_orbit_finite(mod4))

    def test_invalid_bound(self):
        """Test a non-positive bound is rejected"""
        with self.assertRaises(ValueError):
            resolve_bound(0)

    def test_maximal_orbit_finite_part(self):
        """Test seeds with infinite orbits are left out"""
        counter = LazySigmaSet(self.alphabet, lambda n, s: n + 1 if s == "a" else n, seeds=[0])
        cyclic = LazySigmaSet(self.alphabet, lambda n, s: (n + 1) % 3 if s == "a" else n, seeds=[0])
        self.assertFalse(is_orbit_finite(counter, 20))
        self.assertEqual(maximal_orbit_finite_part(counter, 20).size, 0)
        part = maximal_orbit_finite_part(cyclic, 20)
        self.assertEqual(part.states, ("0", "1", "2"))
        self.assertEqual(part.run("0", "aa"), 2)

    def test_inclusion(self):
        """Test the orbit-finite part of a finite Σ-set includes equivariantly"""
        mod4 = sigma_set_from_function(range(4), lambda n, s: (n + 1) % 4 if s == "a" else n, self.alphabet)
        part = maximal_orbit_finite_part(mod4)
        self.assertTrue(check_morphism(inclusion_morphism(part, mod4)))
        self.assertTrue(np.array_equal(part.delta, mod4.delta))

    def test_orbit_monotone_in_bound(self):
        """Test a Finite orbit stays Finite with the same states under any larger bound"""
        for language in random_corpus(15, self.alphabet, max_depth=3, seed=11):
            presentation = language_presentation(language)
            result = orbit(presentation.sigma_set, presentation.state)
            self.assertTrue(result.is_finite, str(language))
            n = result.size
            expected = [str(s) for s in result.states]
            for bound in (n, n + 1, 2 * n + 5):
                larger = orbit(presentation.sigma_set, presentation.state, bound)
                self.assertTrue(larger.is_finite, f"{language} at {bound}")
                self.assertEqual([str(s) for s in larger.states], expected)
            if n > 1:
                self.assertFalse(orbit(presentation.sigma_set, presentation.state, n - 1).is_finite)

    def test_exceeded_bound_at_every_bound(self):
        """Test the counter orbit is never Finite, whatever the bound"""
        presentation = counter_presentation()
        for bound in (1, 5, 40):
            result = orbit(presentation.sigma_set, presentation.state, bound)
            self.assertFalse(result.is_finite)
            self.assertEqual(result.visited, bound + 1)

    def test_maximal_part_matches_derivative_closure(self):
        """Test the orbit-finite part of one seed has the size of its derivative closure"""
        for language in random_corpus(15, self.alphabet, max_depth=3, seed=12):
            part = maximal_orbit_finite_part(derivative_sigma_set(self.alphabet, [language]))
            presentation = language_presentation(language)
            closure = orbit(presentation.sigma_set, presentation.state)
            self.assertEqual(part.size, closure.size, str(language))
            self.assertEqual(part.size, minimal_automaton(language).size, str(language))

    def test_maximal_part_shares_states_between_seeds(self):
        """Test seeds with overlapping closures share their states"""
        seeds = [parse_regex("(ab)*", self.alphabet), parse_regex("b(ab)*", self.alphabet)]
        self.assertEqual(maximal_orbit_finite_part(derivative_sigma_set(self.alphabet, seeds)).size, 3)
        seeds = [parse_regex("(ab)*", self.alphabet), parse_regex("a*", self.alphabet)]
        self.assertEqual(maximal_orbit_finite_part(derivative_sigma_set(self.alphabet, seeds)).size, 4)


if __name__ == '__main__':
    unittest.main()
