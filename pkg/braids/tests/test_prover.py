from django.test import SimpleTestCase, override_settings

from braids.braid import pure_braid_gens
from braids.errors import NotFound, ReplayError
from braids.parsing import parse_word
from braids.pbg import ParamLetter, format_word, plain_letters
from braids.prover import (
    BACKWARD,
    FORWARD,
    P,
    Q,
    Add,
    Derivation,
    Neg,
    Step,
    apply_rule,
    base_rules,
    certify_commutation,
    derivation_from_record,
    derivation_to_record,
    format_rule,
    prove_equal,
    replay,
    rule_set,
    shortcut_derivations,
    solve,
    verify_shortcuts,
)
from braids.ring import poly, ring_zero, symbol
from braids.rootsys import RootSystem
from braids.schemas import DerivationRecord
from braids.verify import twine_words

A1 = RootSystem("A", 2)
A2 = RootSystem("A", 3)
A3 = RootSystem("A", 4)
D4 = RootSystem("D", 4)

ZAB = poly(("a", "b"))
ZA = poly(("a",))
FREE_A = poly(("a",), commutative=False)


def rules_by_name(rs, shortcuts=True):
    return {rule.name: rule for rule in rule_set(rs, ZAB, shortcuts)}


class ExpressionTests(SimpleTestCase):
    def setUp(self):
        self.a, self.b = symbol(ZAB, "a"), symbol(ZAB, "b")

    def test_sum_with_two_unknowns_puts_the_value_left(self):
        bindings = {}
        self.assertTrue(solve(Add(P, Q), self.a, bindings, ZAB))
        self.assertEqual(bindings, {"q": ring_zero(ZAB), "p": self.a})

    def test_sum_with_one_unknown(self):
        bindings = {"p": self.a}
        self.assertTrue(solve(Add(P, Q), self.a + self.b, bindings, ZAB))
        self.assertEqual(bindings["q"], self.b)

    def test_negation(self):
        bindings = {}
        self.assertTrue(solve(Neg(P), self.a, bindings, ZAB))
        self.assertEqual(bindings["p"], -self.a)

    def test_conflicting_binding(self):
        self.assertFalse(solve(P, self.b, {"p": self.a}, ZAB))


class RuleTests(SimpleTestCase):
    def setUp(self):
        self.a, self.b = symbol(ZAB, "a"), symbol(ZAB, "b")
        self.zero = ring_zero(ZAB)

    def test_rule_text(self):
        rules = rules_by_name(A2)
        self.assertEqual(format_rule(rules["A1[1]"]), "y1[p] y1 y1[q] = y1 y1 y1[p+q]")
        self.assertEqual(format_rule(rules["free[2]"]), "y2[p] y2[p]^-1 = 1")
        self.assertEqual(format_rule(rules["A2[1,2]"]), "y1[p] y2[q] y1[r] = y2[r] y1[q+p*r] y2[p]")

    def test_base_rule_names(self):
        names = {rule.name for rule in base_rules(A3)}
        self.assertIn("A1xA1[1,3]", names)
        self.assertIn("A2[2,3]", names)
        self.assertNotIn("A1xA1[1,2]", names)

    def test_shortcuts_are_optional(self):
        self.assertNotIn("merge[1]", rules_by_name(A2, shortcuts=False))
        self.assertIn("merge[1]", rules_by_name(A2))
        self.assertIn("rel10[3,4]", rules_by_name(D4))

    def test_merge_forward(self):
        word = (ParamLetter("1", self.a), ParamLetter("1", self.zero, -1), ParamLetter("1", self.b))
        new, bindings = apply_rule(rules_by_name(A2)["merge[1]"], FORWARD, word, 0, ZAB)
        self.assertEqual(format_word(new), "y1[a+b]")
        self.assertEqual(bindings, {"p": self.a, "q": self.b})

    def test_backward_defaults_unbound_variables_to_zero(self):
        word = (ParamLetter("1", self.zero), ParamLetter("1", self.zero), ParamLetter("1", self.a))
        new, _ = apply_rule(rules_by_name(A2)["A1[1]"], BACKWARD, word, 0, ZAB)
        self.assertEqual(format_word(new), "y1[a] y1 y1")

    def test_no_match(self):
        word = (ParamLetter("1", self.a), ParamLetter("2", self.b))
        self.assertIsNone(apply_rule(rules_by_name(A2)["A2[1,2]"], FORWARD, word, 0, ZAB))
        self.assertIsNone(apply_rule(rules_by_name(A2)["free[1]"], FORWARD, word, 0, ZAB))


class ShortcutTests(SimpleTestCase):
    def test_stored_derivations_replay(self):
        for rs in (A1, A3, D4):
            self.assertEqual(
                {name: error for name, error in verify_shortcuts(rs).items() if error is not None},
                {},
                str(rs),
            )

    def test_merge_derivation_uses_seven_base_steps(self):
        derivation = shortcut_derivations(A1)["merge[1]"]
        self.assertEqual(len(derivation.steps), 7)
        self.assertEqual(format_word(derivation.start), "y1[a] y1^-1 y1[b]")
        self.assertEqual(format_word(derivation.end), "y1[a+b]")


class SearchTests(SimpleTestCase):
    def setUp(self):
        self.a = symbol(ZAB, "a")
        self.zero = ring_zero(ZAB)

    def word(self, text, rs=A2):
        return parse_word(rs, ZAB, text)

    def test_equal_words_need_no_steps(self):
        derivation = prove_equal(A2, ZAB, self.word("y1[a] y2"), self.word("y1[a] y2"))
        self.assertEqual(derivation.steps, ())

    def test_single_rule(self):
        u, v = self.word("y1[a] y1 y1[b]"), self.word("y1 y1 y1[a+b]")
        derivation = prove_equal(A2, ZAB, u, v, shortcuts=False)
        self.assertEqual(len(derivation.steps), 1)
        self.assertEqual(derivation.steps[0].rule, "A1[1]")
        self.assertEqual(replay(A2, ZAB, derivation, shortcuts=False), v)

    def test_inverse_expansion(self):
        u, v = self.word("y2[a]^-1"), self.word("y2^-1 y2[-a] y2^-1")
        derivation = prove_equal(A2, ZAB, u, v, shortcuts=False)
        self.assertEqual([step.rule for step in derivation.steps], ["inv[2]"])

    def test_commuting_letters(self):
        u, v = self.word("y1[a] y3[b]", A3), self.word("y3[b] y1[a]", A3)
        derivation = prove_equal(A3, ZAB, u, v)
        self.assertEqual(replay(A3, ZAB, derivation), v)

    def test_different_braids_are_never_proven(self):
        with self.assertRaises(NotFound) as ctx:
            prove_equal(A2, ZAB, self.word("y1"), self.word("y2"), max_steps=60, max_len=4)
        self.assertEqual(ctx.exception.max_steps, 60)
        self.assertEqual(ctx.exception.max_len, 4)

    @override_settings(PARABRAID_MAX_STEPS=5, PARABRAID_MAX_LEN=3)
    def test_bounds_come_from_settings(self):
        with self.assertRaises(NotFound) as ctx:
            prove_equal(A2, ZAB, self.word("y1"), self.word("y2"))
        self.assertEqual(ctx.exception.max_steps, 5)
        self.assertEqual(ctx.exception.max_len, 3)


class ReplayTests(SimpleTestCase):
    def setUp(self):
        self.start = parse_word(A2, ZAB, "y1[a] y1 y1[b]")
        self.end = parse_word(A2, ZAB, "y1 y1 y1[a+b]")

    def test_unknown_rule(self):
        derivation = Derivation(self.start, self.end, (Step("nope[1]", FORWARD, 0),))
        with self.assertRaisesMessage(ReplayError, "unknown rule"):
            replay(A2, ZAB, derivation)

    def test_rule_that_does_not_apply(self):
        derivation = Derivation(self.start, self.end, (Step("A1[1]", FORWARD, 1),))
        with self.assertRaisesMessage(ReplayError, "does not apply"):
            replay(A2, ZAB, derivation)

    def test_wrong_end_word(self):
        derivation = Derivation(self.start, self.start, (Step("A1[1]", FORWARD, 0),))
        with self.assertRaisesMessage(ReplayError, "end word"):
            replay(A2, ZAB, derivation)


class RecordTests(SimpleTestCase):
    def test_record_survives_json(self):
        u = parse_word(A2, ZAB, "y1[a] y1 y1[b]")
        v = parse_word(A2, ZAB, "y1 y1 y1[a+b]")
        derivation = prove_equal(A2, ZAB, u, v, shortcuts=False)
        record = derivation_to_record(A2, ZAB, derivation, shortcuts=False)
        self.assertEqual(record.start, "y1[a] y1 y1[b]")
        self.assertEqual(record.steps[0].bindings, {"p": "a", "q": "b"})

        loaded = DerivationRecord.model_validate_json(record.model_dump_json())
        rs, ring, again, shortcuts = derivation_from_record(loaded)
        self.assertEqual((rs, ring, shortcuts), (A2, ZAB, False))
        self.assertEqual(again, derivation)
        self.assertEqual(replay(rs, ring, again, shortcuts), v)


class CertificateTests(SimpleTestCase):
    def certify(self, rs, ring, label, name):
        derivation = certify_commutation(rs, ring, label, dict(pure_braid_gens(rs))[name])
        self.assertTrue(derivation.steps)
        self.assertEqual(replay(rs, ring, derivation), derivation.end)
        return derivation

    def test_adjacent_square_in_a3(self):
        derivation = self.certify(A3, FREE_A, "1", "a{2,2}")
        self.assertEqual(format_word(derivation.start), "y1[a] y1^-1 y2 y2")
        self.assertEqual(format_word(derivation.end), "y2 y2 y1[a] y1^-1")
        self.assertLessEqual(len(derivation.steps), 6)

    def test_distant_square_in_a3(self):
        derivation = self.certify(A3, FREE_A, "1", "a{3,3}")
        self.assertEqual(len(derivation.steps), 4)

    def test_distant_square_in_d4(self):
        derivation = self.certify(D4, ZA, "4", "a{2,2}")
        self.assertEqual(format_word(derivation.end), "y2 y2 y4[a] y4^-1")
        self.assertEqual(len(derivation.steps), 4)

    def test_twine_in_d4(self):
        left, right = twine_words(D4)
        u = plain_letters([letter.label for letter in left], ZA)
        v = plain_letters([letter.label for letter in right], ZA)
        derivation = prove_equal(D4, ZA, u, v)
        self.assertEqual(len(derivation.steps), 2)
        self.assertEqual(replay(D4, ZA, derivation), v)
