from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from braids.braid import BraidLetter
from braids.errors import InvalidSystem, MalformedWord
from braids.pbg import (
    ParamLetter,
    check_param_word,
    expand_inverse,
    format_word,
    normalize,
    phi,
    plain_letters,
    psi,
    psi_general,
    psi_lifts,
    psi_simple,
    relation_instances,
    specialize,
    symbolic_ring,
    word_inverse,
)
from braids.ring import integers, modular, poly, ring_from_int, ring_neg, ring_zero, symbol
from braids.rootsys import FORK, RootSystem, simple_labels, simple_root, sorted_roots
from braids.steinberg import SemidirectElem, StLetter, matrices_equal, sd_equal, sd_identity, st_eval, st_matrix

A2 = RootSystem("A", 3)
A3 = RootSystem("A", 4)
D3 = RootSystem("D", 3)
D4 = RootSystem("D", 4)

FREE = poly(("a", "b", "c"), commutative=False)
ZABC = poly(("a", "b", "c"))


def param_words(rs, ring, max_size):
    values = st.sampled_from([ring_zero(ring)] + [symbol(ring, s) for s in ring.symbols])
    letters = st.builds(ParamLetter, st.sampled_from(simple_labels(rs)), values, st.sampled_from((1, -1)))
    return st.lists(letters, max_size=max_size).map(tuple)


class WordTests(SimpleTestCase):
    def setUp(self):
        self.a, self.b, self.c = (symbol(ZABC, s) for s in "abc")

    def test_format(self):
        word = (ParamLetter("1", self.a), ParamLetter("2", ring_zero(ZABC)), ParamLetter("1", self.b + self.a * self.c, -1))
        self.assertEqual(format_word(word), "y1[a] y2 y1[b+a*c]^-1")
        self.assertEqual(format_word(()), "1")
        self.assertEqual(format_word((ParamLetter(FORK, self.a),)), "y2p[a]")

    def test_check_rejects_foreign_labels(self):
        with self.assertRaises(MalformedWord):
            check_param_word(A2, (ParamLetter("3", self.a),))

    def test_inverse_and_expansion(self):
        word = (ParamLetter("1", self.a), ParamLetter("2", self.b, -1))
        self.assertEqual(format_word(word_inverse(word)), "y2[b] y1[a]^-1")
        self.assertEqual(format_word(expand_inverse(word)), "y1[a] y2^-1 y2[-b] y2^-1")

    def test_specialize(self):
        word = (ParamLetter("1", self.a + self.b),)
        two = ring_from_int(ZABC, 2)
        self.assertEqual(format_word(specialize(word, {"a": two}, ZABC)), "y1[2+b]")

    def test_plain_letters(self):
        self.assertEqual(format_word(plain_letters(["1", "2"], ZABC, -1)), "y1^-1 y2^-1")


class RelationInstanceTests(SimpleTestCase):
    def test_symbolic_instances(self):
        names = [instance.name for instance in relation_instances(A3, FREE)]
        self.assertEqual(
            sorted(names),
            sorted(["A1[1]", "A1[2]", "A1[3]", "A1xA1[1,3]", "A2[1,2]", "A2[2,3]"]),
        )

    def test_concrete_instances(self):
        instances = relation_instances(RootSystem("A", 2), modular(2))
        self.assertEqual(len(instances), 8)
        self.assertIn("A1[1](a=1,b=0,c=1)", [instance.name for instance in instances])

    def test_d_needs_commutative_ring(self):
        with self.assertRaises(InvalidSystem):
            relation_instances(D3, FREE)

    def test_a2_coefficient(self):
        instance = next(i for i in relation_instances(A2, FREE) if i.name == "A2[1,2]")
        self.assertEqual(format_word(instance.lhs), "y1[a] y2[b] y1[c]")
        self.assertEqual(format_word(instance.rhs), "y2[c] y1[b+a*c] y2[a]")


class PhiTests(SimpleTestCase):
    def test_relations_have_equal_images(self):
        for rs, ring in ((A2, FREE), (A3, FREE), (D3, ZABC), (D4, ZABC)):
            target = symbolic_ring(ring)
            for instance in relation_instances(rs, ring):
                self.assertTrue(
                    sd_equal(rs, target, phi(rs, target, instance.lhs), phi(rs, target, instance.rhs)),
                    f"{rs} {instance.name}",
                )

    def test_concrete_relations(self):
        ring = integers()
        for instance in relation_instances(A2, ring):
            self.assertTrue(sd_equal(A2, ring, phi(A2, ring, instance.lhs), phi(A2, ring, instance.rhs)), instance.name)

    def test_generator_image(self):
        a = symbol(ZABC, "a")
        image = phi(A2, ZABC, (ParamLetter("2", a),))
        self.assertEqual(image, SemidirectElem((StLetter((0, 1, -1), a),), (BraidLetter("2", 1),)))
        self.assertEqual(phi(A2, ZABC, (ParamLetter("2", ring_zero(ZABC)),)).st, ())

    def test_inverse_letter(self):
        a = symbol(ZABC, "a")
        image = phi(A2, ZABC, (ParamLetter("1", a, -1),))
        self.assertEqual(image.st, (StLetter((-1, 1, 0), ring_neg(a)),))
        self.assertEqual(image.br, (BraidLetter("1", -1),))

    def test_d_rejects_noncommutative(self):
        with self.assertRaises(InvalidSystem):
            phi(D3, FREE, ())

    @settings(max_examples=60, deadline=None)
    @given(param_words(A2, FREE, 6))
    def test_word_times_inverse(self, word):
        image = phi(A2, FREE, word + word_inverse(word))
        self.assertTrue(sd_equal(A2, FREE, image, sd_identity()))

    @settings(max_examples=40, deadline=None)
    @given(param_words(D3, ZABC, 5))
    def test_inverse_expansion_keeps_the_image(self, word):
        self.assertTrue(sd_equal(D3, ZABC, phi(D3, ZABC, expand_inverse(word)), phi(D3, ZABC, word)))


class PsiTests(SimpleTestCase):
    def setUp(self):
        self.ring = poly(("a",))
        self.a = symbol(self.ring, "a")

    def test_simple(self):
        self.assertEqual(format_word(psi_simple(A2, "1", self.a)), "y1[a] y1^-1")

    def test_non_simple_root(self):
        self.assertEqual(format_word(psi_general(A2, (1, 0, -1), self.a)), "y2 y1[a] y1^-1 y2^-1")

    def test_phi_of_psi(self):
        for rs in (A2, A3, D3):
            for root in sorted_roots(rs):
                image = normalize(rs, self.ring, psi_general(rs, root, self.a))
                self.assertEqual(image.br, ())
                self.assertTrue(matrices_equal(st_eval(rs, self.ring, image.st), st_matrix(rs, root, self.a)), root)

    def test_lifts_agree(self):
        for rs in (A3, D3):
            for root in sorted_roots(rs):
                lifts = psi_lifts(rs, root, self.a)
                self.assertGreaterEqual(len(lifts), 2)
                base = phi(rs, self.ring, lifts[0])
                for lift in lifts[1:]:
                    self.assertTrue(sd_equal(rs, self.ring, base, phi(rs, self.ring, lift)), root)

    def test_psi_of_phi(self):
        for label in simple_labels(D3):
            word = (ParamLetter(label, self.a),)
            image = phi(D3, self.ring, word)
            self.assertTrue(sd_equal(D3, self.ring, phi(D3, self.ring, psi(D3, self.ring, image)), image))

    def test_psi_keeps_braid_part(self):
        elem = SemidirectElem((StLetter(simple_root(A2, "2"), self.a),), (BraidLetter("1", -1),))
        self.assertEqual(format_word(psi(A2, self.ring, elem)), "y2[a] y2^-1 y1^-1")
