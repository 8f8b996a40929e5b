from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from braids.braid import (
    BraidLetter,
    GarsideNF,
    braid_equal,
    braid_inverse,
    delta_word,
    format_braid,
    free_reduce,
    garside_nf,
    is_pure,
    nf_word,
    plain_word,
    positive_class,
    pure_braid_gens,
)
from braids.errors import InvalidSystem, MalformedWord
from braids.rootsys import RootSystem, simple_labels
from braids.verify import burau_key, burau_matrix, reduced_words, twine_words

A2 = RootSystem("A", 3)
A3 = RootSystem("A", 4)
D4 = RootSystem("D", 4)
D5 = RootSystem("D", 5)


def words(rs, max_size):
    letters = st.builds(BraidLetter, st.sampled_from(simple_labels(rs)), st.sampled_from((1, -1)))
    return st.lists(letters, max_size=max_size).map(tuple)


class WordTests(SimpleTestCase):
    def test_format(self):
        self.assertEqual(format_braid(()), "1")
        self.assertEqual(format_braid((BraidLetter("2'", 1), BraidLetter("3", -1))), "y2p y3^-1")

    def test_free_reduce(self):
        word = plain_word(["1", "2"]) + (BraidLetter("2", -1), BraidLetter("1", -1), BraidLetter("1", 1))
        self.assertEqual(free_reduce(word), (BraidLetter("1", 1),))

    def test_inverse(self):
        word = (BraidLetter("1", 1), BraidLetter("2", -1))
        self.assertEqual(braid_inverse(word), (BraidLetter("2", 1), BraidLetter("1", -1)))

    def test_bad_letter(self):
        with self.assertRaises(MalformedWord):
            garside_nf(A2, (BraidLetter("5", 1),))
        with self.assertRaises(MalformedWord):
            garside_nf(A2, (BraidLetter("1", 2),))


class PureBraidGeneratorTests(SimpleTestCase):
    def test_type_a(self):
        gens = dict(pure_braid_gens(A2))
        self.assertEqual(
            {name: format_braid(word) for name, word in gens.items()},
            {"a{1,1}": "y1 y1", "a{2,2}": "y2 y2", "a{2,1}": "y2 y1 y1 y2"},
        )
        self.assertEqual(len(pure_braid_gens(A3)), 6)

    def test_d4_list(self):
        gens = dict(pure_braid_gens(D4))
        self.assertEqual(len(gens), 12)
        self.assertEqual(format_braid(gens["a{3,2'}"]), "y3 y2p y2p y3")
        self.assertEqual(format_braid(gens["b{3,3}"]), "y3 y2 y2p y3 y3 y2p y2 y3")
        self.assertEqual(
            [name for name, _ in pure_braid_gens(D4)],
            [
                "a{2,2}", "a{2',2'}",
                "a{3,3}", "a{3,2}", "a{3,2'}", "b{3,3}",
                "a{4,4}", "a{4,3}", "a{4,2}", "a{4,2'}", "b{4,3}", "b{4,4}",
            ],
        )
        self.assertEqual(
            [format_braid(word) for _, word in pure_braid_gens(D4)][6:10],
            ["y4 y4", "y4 y3 y3 y4", "y4 y3 y2 y2 y3 y4", "y4 y3 y2p y2p y3 y4"],
        )

    def test_generators_are_pure(self):
        for rs in (A3, D4, D5):
            for name, word in pure_braid_gens(rs):
                self.assertTrue(is_pure(rs, word), name)


class GarsideTests(SimpleTestCase):
    def test_identity(self):
        self.assertEqual(garside_nf(A2, ()), GarsideNF(0, ()))

    def test_braid_relations(self):
        self.assertTrue(braid_equal(A2, plain_word(["1", "2", "1"]), plain_word(["2", "1", "2"])))
        self.assertFalse(braid_equal(A2, plain_word(["1", "2"]), plain_word(["2", "1"])))
        self.assertTrue(braid_equal(A3, plain_word(["1", "3"]), plain_word(["3", "1"])))
        self.assertTrue(braid_equal(D4, plain_word(["2", "2'"]), plain_word(["2'", "2"])))
        self.assertTrue(braid_equal(D4, plain_word(["2'", "3", "2'"]), plain_word(["3", "2'", "3"])))

    def test_delta(self):
        for rs in (A2, A3, D4):
            self.assertEqual(garside_nf(rs, delta_word(rs)), GarsideNF(1, ()))
            self.assertEqual(garside_nf(rs, braid_inverse(delta_word(rs))), GarsideNF(-1, ()))

    def test_delta_squared_is_central(self):
        square = delta_word(D4) * 2
        for label in simple_labels(D4):
            y = (BraidLetter(label, 1),)
            self.assertTrue(braid_equal(D4, square + y, y + square))

    def test_twine(self):
        for rs in (D4, D5):
            left, right = twine_words(rs)
            self.assertTrue(braid_equal(rs, left, right))

    def test_positive_class(self):
        self.assertEqual(
            positive_class(A2, plain_word(["1", "2", "1"])),
            frozenset({("1", "2", "1"), ("2", "1", "2")}),
        )

    @settings(max_examples=80, deadline=None)
    @given(words(A3, 8))
    def test_word_times_inverse_is_trivial(self, word):
        self.assertEqual(garside_nf(A3, word + braid_inverse(word)), GarsideNF(0, ()))

    @settings(max_examples=80, deadline=None)
    @given(words(D4, 7))
    def test_normal_form_is_stable(self, word):
        nf = garside_nf(D4, word)
        self.assertEqual(garside_nf(D4, nf_word(D4, nf)), nf)
        self.assertEqual(garside_nf(D4, free_reduce(word)), nf)

    @settings(max_examples=150, deadline=None)
    @given(words(A2, 6), words(A2, 6))
    def test_agrees_with_burau(self, u, v):
        self.assertEqual(braid_equal(A2, u, v), burau_key(A2, u) == burau_key(A2, v))


class BurauTests(SimpleTestCase):
    def test_generator_matrix(self):
        M = burau_matrix(A2, plain_word(["1"]))
        self.assertEqual(M.shape, (3, 3, 3))
        # column 0 is (1-t, 1, 0), column 1 is (t, 0, 0)
        self.assertEqual(M[:, 0].tolist(), [[0, 1, -1], [0, 1, 0], [0, 0, 0]])
        self.assertEqual(M[:, 1].tolist(), [[0, 0, 1], [0, 0, 0], [0, 0, 0]])

    def test_relations(self):
        self.assertEqual(burau_key(A3, plain_word(["1", "2", "1"])), burau_key(A3, plain_word(["2", "1", "2"])))
        self.assertEqual(burau_key(A3, plain_word(["1", "3"])), burau_key(A3, plain_word(["3", "1"])))
        self.assertEqual(burau_key(A3, (BraidLetter("2", 1), BraidLetter("2", -1))), burau_key(A3, ()))
        self.assertEqual(burau_key(A3, (BraidLetter("2", -1), BraidLetter("2", 1))), burau_key(A3, ()))
        self.assertNotEqual(burau_key(A3, plain_word(["1"])), burau_key(A3, plain_word(["2"])))
        self.assertNotEqual(burau_key(A3, plain_word(["1", "1"])), burau_key(A3, ()))

    def test_type_a_only(self):
        with self.assertRaises(InvalidSystem):
            burau_matrix(D4, plain_word(["2"]))

    def test_reduced_words(self):
        words = reduced_words(["1", "2"], 2)
        self.assertEqual(len(words), 1 + 4 + 12)
        self.assertNotIn((BraidLetter("1", 1), BraidLetter("1", -1)), words)
