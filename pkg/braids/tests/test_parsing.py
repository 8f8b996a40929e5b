from django.test import SimpleTestCase

from braids.braid import BraidLetter
from braids.errors import ParseError, UnknownGenerator
from braids.parsing import parse_braid_word, parse_ring, parse_ring_expr, parse_steinberg_word, parse_word
from braids.pbg import format_word
from braids.ring import ideal, integers, modular, poly, to_text
from braids.rootsys import FORK, RootSystem
from braids.steinberg import format_steinberg

A2 = RootSystem("A", 3)
A4 = RootSystem("A", 5)
D4 = RootSystem("D", 4)

ZAB = poly(("a", "b"))


class RingDescriptorTests(SimpleTestCase):
    def test_descriptors(self):
        self.assertEqual(parse_ring("int"), integers())
        self.assertEqual(parse_ring("mod:7"), modular(7))
        self.assertEqual(parse_ring("ideal:2,8"), ideal(2, 8))
        self.assertEqual(parse_ring(" poly:a,b "), ZAB)
        self.assertEqual(str(parse_ring("poly:a,b,noncomm,mod3")), "poly:a,b,noncomm,mod3")

    def test_bad_descriptors(self):
        for text in ("foo", "mod:x", "mod:1", "ideal:3,8", "poly:", "poly:a,B"):
            with self.assertRaises(ParseError, msg=text):
                parse_ring(text)

    def test_unknown_ring_lists_alternatives(self):
        with self.assertRaises(ParseError) as ctx:
            parse_ring("real")
        self.assertEqual(ctx.exception.expected, ("ideal:", "int", "mod:", "poly:"))


class RingExpressionTests(SimpleTestCase):
    def test_integers(self):
        self.assertEqual(to_text(parse_ring_expr(integers(), "3*(2-5)")), "-9")
        self.assertEqual(to_text(parse_ring_expr(modular(5), "4*4")), "1")

    def test_polynomials(self):
        self.assertEqual(to_text(parse_ring_expr(ZAB, "(a+b)*(a-b)")), "a*a-b*b")
        free = poly(("a", "b"), commutative=False)
        self.assertEqual(to_text(parse_ring_expr(free, "(a+b)*(a-b)")), "a*a-a*b+b*a-b*b")
        self.assertEqual(to_text(parse_ring_expr(ZAB, "-b+2*a")), "2*a-b")

    def test_unknown_symbol_is_positioned(self):
        with self.assertRaises(ParseError) as ctx:
            parse_ring_expr(ZAB, "a + z")
        self.assertEqual(ctx.exception.offset, 4)

    def test_trailing_input(self):
        with self.assertRaises(ParseError) as ctx:
            parse_ring_expr(ZAB, "a b")
        self.assertEqual(ctx.exception.offset, 2)
        self.assertIn("end of input", ctx.exception.expected)


class WordTests(SimpleTestCase):
    def test_parameters_and_inverses(self):
        word = parse_word(A2, ZAB, "y1[a] y2^-1 y1[-b+2*a]^-1")
        self.assertEqual(format_word(word), "y1[a] y2^-1 y1[2*a-b]^-1")

    def test_identity(self):
        self.assertEqual(parse_word(A2, ZAB, "1"), ())
        self.assertEqual(parse_word(A2, ZAB, "  1 "), ())

    def test_fork_generator(self):
        word = parse_word(D4, ZAB, "y2p[a] y2")
        self.assertEqual([letter.label for letter in word], [FORK, "2"])

    def test_unknown_generator(self):
        with self.assertRaises(UnknownGenerator) as ctx:
            parse_word(A4, ZAB, "y1 y9")
        self.assertEqual(ctx.exception.token, "y9")
        self.assertEqual(ctx.exception.offset, 3)
        with self.assertRaises(UnknownGenerator):
            parse_word(A2, ZAB, "y2p")
        with self.assertRaises(UnknownGenerator):
            parse_word(D4, ZAB, "y1")

    def test_stray_token(self):
        with self.assertRaises(ParseError) as ctx:
            parse_word(A2, ZAB, "y1 z")
        self.assertEqual(ctx.exception.offset, 3)
        self.assertEqual(ctx.exception.expected, ("'y'",))

    def test_empty_text(self):
        with self.assertRaises(ParseError):
            parse_word(A2, ZAB, "")

    def test_unclosed_parameter(self):
        with self.assertRaises(ParseError) as ctx:
            parse_word(A2, ZAB, "y1[a")
        self.assertEqual(ctx.exception.expected, ("']'",))

    def test_plain_braid_words(self):
        self.assertEqual(parse_braid_word(A2, "y1 y2^-1"), (BraidLetter("1", 1), BraidLetter("2", -1)))
        with self.assertRaises(ParseError):
            parse_braid_word(A2, "y1[2]")


class SteinbergWordTests(SimpleTestCase):
    def test_root_spellings(self):
        word = parse_steinberg_word(A2, ZAB, "x{1,3}[a] x{e2-e3} x{+1-2}[b]")
        self.assertEqual(format_steinberg(word), "x{e1-e3}[a] x{e2-e3}[1] x{e1-e2}[b]")

    def test_type_d_roots(self):
        word = parse_steinberg_word(D4, ZAB, "x{e1+e2}[a] x{-2-4}")
        self.assertEqual(format_steinberg(word), "x{e1+e2}[a] x{-e2-e4}[1]")

    def test_not_a_root(self):
        with self.assertRaises(ParseError) as ctx:
            parse_steinberg_word(A2, ZAB, "x{1,1}")
        self.assertEqual(ctx.exception.offset, 2)

    def test_non_unital_ring_needs_parameters(self):
        self.assertEqual(len(parse_steinberg_word(A2, ideal(2, 8), "x{1,2}[2]")), 1)
        with self.assertRaises(ParseError):
            parse_steinberg_word(A2, ideal(2, 8), "x{1,2}")
