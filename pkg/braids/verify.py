"""
Verification suites. Every suite takes (rs, ring, **options) and returns a
CheckReport whose checks are sorted by id, so reruns differ only in timing.

Statuses:
- pass / fail      decided by an exact oracle (matrices, Garside, replay)
- unproven         the prover ran out of budget; never a failure
- skipped          the check does not apply to the system or ring
- info             a recorded property of the system, e.g. sign_free
"""
import itertools
import logging
import time
from collections import defaultdict

import numpy as np
from django.conf import settings

from .braid import (
    BraidLetter,
    braid_equal,
    delta_word,
    format_braid,
    garside_nf,
    nf_word,
    plain_word,
    positive_class,
    pure_braid_gens,
)
from .errors import InvalidSystem, NotFound, ParabraidError
from .paint import (
    kassel_reutenauer_relations,
    paint_vs_phi,
    paint_word,
    pure_braid_shadow,
    symbolic,
)
from .pbg import (
    ParamLetter,
    expand_inverse,
    format_word,
    normalize,
    phi,
    pi,
    plain_letters,
    psi,
    psi_general,
    psi_lifts,
    psi_simple,
    relation_instances,
    symbolic_ring,
    word_inverse,
)
from .prover import certify_commutation, prove_equal, verify_shortcuts
from .ring import POLY, elements, poly, ring_neg, ring_zero, symbol
from .rootsys import (
    label_of,
    oriented_pairs,
    root_to_text,
    simple_labels,
    simple_reflection,
    simple_root,
    sorted_roots,
    weyl_act,
    weyl_product,
)
from .schemas import CheckReport, CheckResult
from .steinberg import (
    StLetter,
    calibrate,
    committed_table,
    conjugation_sign,
    format_steinberg,
    is_sign_free,
    mat_mul,
    matrices_equal,
    perm_matrix,
    preserves_split_form,
    sd_equal,
    st_eval,
    st_matrix,
    st_relation_instances,
    structure_constant,
)

logger = logging.getLogger(__name__)


class Report:
    def __init__(self, suite, rs, ring, progress=None):
        self.suite = suite
        self.rs = rs
        self.ring = ring
        self.progress = progress
        self.results = []
        self.started = time.perf_counter()

    def each(self, items, desc):
        items = list(items)
        if self.progress is None:
            return items
        return self.progress(items, desc=f"{self.suite}: {desc}")

    def check(self, check_id, ok, witness=None):
        status = "pass" if ok else "fail"
        logger.debug("%s %s: %s", self.suite, check_id, status)
        self.results.append(CheckResult(id=check_id, status=status, witness=None if ok else witness))

    def skip(self, check_id, reason):
        self.results.append(CheckResult(id=check_id, status="skipped", witness=reason))

    def note(self, check_id, fact):
        """A recorded fact of the system; neither passes nor fails."""
        self.results.append(CheckResult(id=check_id, status="info", witness=fact))

    def attempt(self, check_id, search):
        """Run a prover search: pass with the step count, or unproven."""
        try:
            derivation = search()
        except NotFound as e:
            self.results.append(CheckResult(id=check_id, status="unproven", witness=str(e)))
            return
        witness = f"derivation with {len(derivation.steps)} steps"
        self.results.append(CheckResult(id=check_id, status="pass", witness=witness))

    def finish(self):
        report = CheckReport(
            suite=self.suite,
            family=self.rs.family,
            rank=self.rs.rank,
            ring=str(self.ring),
            checks=sorted(self.results, key=lambda check: check.id),
            elapsed_ms=int((time.perf_counter() - self.started) * 1000),
        )
        logger.info(
            "suite %s on %s over %s: %s in %d ms",
            self.suite, self.rs, self.ring, report.counts(), report.elapsed_ms,
        )
        return report


def _suite_steps(max_steps):
    return max_steps if max_steps is not None else settings.PARABRAID_SUITE_MAX_STEPS


def _sd_witness(left, right):
    return f"{format_steinberg(left.st)} | {format_steinberg(right.st)}"


# =========================
# PHI
# =========================

def check_phi_well_defined(rs, ring, progress=None, **options):
    """Every relation of Br(rs, ring) has equal images under phi."""
    report = Report("phi", rs, ring, progress)
    target = symbolic_ring(ring) if ring.kind == POLY else ring
    for instance in report.each(relation_instances(rs, ring), "relations"):
        left, right = phi(rs, target, instance.lhs), phi(rs, target, instance.rhs)
        report.check(instance.name, sd_equal(rs, target, left, right), _sd_witness(left, right))
    return report.finish()


# =========================
# PURE BRAID LEMMA
# =========================

def check_pure_braid_lemma(rs, ring, prover=True, max_steps=None, progress=None, **options):
    """
    y_k^a (y_k^0)^-1 against every pure braid generator: the painted model
    always, the prover when enabled.
    """
    report = Report("pbl", rs, ring, progress)
    target = symbolic(ring, ("a",))
    pairs = [(name, omega, k) for name, omega in pure_braid_gens(rs) for k in simple_labels(rs)]
    for name, omega, k in report.each(pairs, "generators"):
        report.check(f"matrix:{name}:{k}", pure_braid_shadow(rs, target, k, omega), format_word(plain_letters([l.label for l in omega], target)))
        if prover:
            report.attempt(
                f"prover:{name}:{k}",
                lambda omega=omega, k=k: certify_commutation(rs, target, k, omega, max_steps=_suite_steps(max_steps)),
            )
    return report.finish()


# =========================
# PSI
# =========================

def check_psi_independence(rs, ring, progress=None, **options):
    """
    - every (w, lift) choice for psi(x_root(a)) has the same phi image
    - psi_general of a simple root is psi_simple
    - conjugating psi(x_root(a)) by b with b(root) simple gives psi of that simple root
    """
    report = Report("psi", rs, ring, progress)
    target = symbolic(ring, ("a",))
    a = symbol(target, "a")
    for root in report.each(sorted_roots(rs), "roots"):
        name = root_to_text(root)
        base = phi(rs, target, psi_general(rs, root, a))
        for i, lift in enumerate(psi_lifts(rs, root, a)):
            other = phi(rs, target, lift)
            report.check(f"lift:{name}:{i}", sd_equal(rs, target, base, other), _sd_witness(base, other))

        label = label_of(rs, root)
        if label is not None:
            report.check(f"simple:{label}", psi_general(rs, root, a) == psi_simple(rs, label, a))

        for word in _conjugators(rs, root):
            image = weyl_act(weyl_product(rs, word), root)
            moved = plain_letters(word, target)
            left = phi(rs, target, moved + psi_general(rs, root, a) + word_inverse(moved))
            right = phi(rs, target, psi_simple(rs, label_of(rs, image), a))
            report.check(f"conj:{name}:{' '.join(word)}", sd_equal(rs, target, left, right), _sd_witness(left, right))
    return report.finish()


def _conjugators(rs, root, length=2):
    """Positive words up to `length` letters whose Weyl image sends `root` to a simple root."""
    labels = simple_labels(rs)
    for size in range(1, length + 1):
        for word in itertools.product(labels, repeat=size):
            if label_of(rs, weyl_act(weyl_product(rs, word), root)) is not None:
                yield word


def check_psi_roundtrip(rs, ring, progress=None, **options):
    """
    - normalize(psi(x_root(a))) is (x_root(a), trivial braid)
    - phi(y_k^a) is exactly (x_k(a), y_k)
    - psi(phi(y_k^a)) has the image of y_k^a
    """
    report = Report("roundtrip", rs, ring, progress)
    target = symbolic(ring, ("a",))
    a = symbol(target, "a")
    for root in report.each(sorted_roots(rs), "roots"):
        image = normalize(rs, target, psi_general(rs, root, a))
        ok = not image.br and matrices_equal(st_eval(rs, target, image.st), st_matrix(rs, root, a))
        report.check(f"phi-psi:{root_to_text(root)}", ok, format_steinberg(image.st))
    for k in simple_labels(rs):
        letter = (ParamLetter(k, a),)
        image = phi(rs, target, letter)
        exact = image.st == (StLetter(simple_root(rs, k), a),) and image.br == (BraidLetter(k, 1),)
        report.check(f"phi-letter:{k}", exact, format_steinberg(image.st))
        back = phi(rs, target, psi(rs, target, image))
        report.check(f"psi-phi:{k}", sd_equal(rs, target, back, image), _sd_witness(back, image))
        inverse = phi(rs, target, letter + (ParamLetter(k, a, -1),))
        report.check(f"inverse:{k}", sd_equal(rs, target, inverse, phi(rs, target, ())), format_steinberg(inverse.st))
        expanded = phi(rs, target, expand_inverse(word_inverse(letter)))
        direct = phi(rs, target, word_inverse(letter))
        report.check(f"expand-inverse:{k}", sd_equal(rs, target, expanded, direct), _sd_witness(expanded, direct))
    return report.finish()


# =========================
# PAINTED MODEL
# =========================

def check_kassel_reutenauer(rs, ring, progress=None, **options):
    """The St_n(A) x| S_n presentation holds in the painted model (type A)."""
    report = Report("kr", rs, ring, progress)
    target = symbolic(ring, ("a", "b", "c"))
    for name, lhs, rhs in report.each(kassel_reutenauer_relations(rs, target), "relations"):
        report.check(name, paint_word(rs, target, lhs) == paint_word(rs, target, rhs), format_word(lhs))
    return report.finish()


def check_paint_relations(rs, ring, progress=None, **options):
    """
    (A1), (A1xA1), (A2) as matrix identities of the painted model. Over a
    noncommutative ring the (A2) coefficient written b+ca must break equality.
    Type D crossings carry conjugation signs, so D runs over F2[a,b,c]
    unless the ring already has characteristic 2.
    """
    report = Report("paint", rs, ring, progress)
    if rs.family == "D" and ring.characteristic != 2:
        ring = poly(("a", "b", "c"), modulus=2)
        report.skip("ring", f"type D painted relations checked over {ring}")
    target = symbolic_ring(ring) if ring.kind == POLY else ring
    for instance in report.each(relation_instances(rs, ring), "relations"):
        same = paint_word(rs, target, instance.lhs) == paint_word(rs, target, instance.rhs)
        report.check(instance.name, same, f"{format_word(instance.lhs)} = {format_word(instance.rhs)}")
    if rs.family == "A" and target.kind == POLY and not target.is_commutative:
        a, b, c = (symbol(target, name) for name in ("a", "b", "c"))
        for x, y in oriented_pairs(rs, 3):
            lhs = (ParamLetter(x, a), ParamLetter(y, b), ParamLetter(x, c))
            rhs = (ParamLetter(y, c), ParamLetter(x, b + c * a), ParamLetter(y, a))
            differs = not (paint_word(rs, target, lhs) == paint_word(rs, target, rhs))
            report.check(f"witness:b+ca[{x},{y}]", differs, "b+ca gave equal matrices")
    else:
        report.skip("witness:b+ca", "needs a noncommutative polynomial ring")
    return report.finish()


def random_words(rs, ring, count, length, seed=0):
    """Reproducible sample words with parameters from the ring's symbols (or sample elements) and 0."""
    rng = np.random.default_rng(seed)
    labels = simple_labels(rs)
    values = elements(ring) + [ring_zero(ring)]
    words = [()]
    for _ in range(count):
        size = int(rng.integers(1, length + 1))
        words.append(tuple(
            ParamLetter(
                labels[int(rng.integers(len(labels)))],
                values[int(rng.integers(len(values)))],
                1 if rng.random() < 0.7 else -1,
            )
            for _ in range(size)
        ))
    return words


def check_paint_vs_phi(rs, ring, signed=False, samples=12, length=5, seed=0, progress=None, **options):
    """
    The painted action factors through phi. The literal Weyl action is exact
    for type A and for type D in characteristic 2; signed=True covers every ring.
    """
    report = Report("paint_vs_phi", rs, ring, progress)
    target = symbolic_ring(ring) if ring.kind == POLY else ring
    for i, word in enumerate(report.each(random_words(rs, target, samples, length, seed), "words")):
        report.check(f"word:{i:03d}", paint_vs_phi(rs, target, word, signed=signed), format_word(word))
    for k in simple_labels(rs):
        report.check(f"letter:{k}", paint_vs_phi(rs, target, (ParamLetter(k, symbol(target, "a")),), signed=signed))
    return report.finish()


# =========================
# STEINBERG CALIBRATION
# =========================

def check_calibration(rs, ring, progress=None, **options):
    """
    - (St0), (St1), (St2) hold for the committed sign table
    - (A2)-oriented simple pairs have structure constant +1
    - type D matrices preserve the split form
    - the signed Weyl action is conjugation by the permutation lifts
    - calibration is idempotent and reproduces the committed table
    """
    report = Report("calibration", rs, ring, progress)
    target = symbolic(ring, ("a", "b"))
    table = committed_table(rs)
    for name, lhs, rhs in report.each(st_relation_instances(rs, target, table), "relations"):
        same = matrices_equal(st_eval(rs, target, lhs, table), st_eval(rs, target, rhs, table))
        report.check(name, same, f"{format_steinberg(lhs)} = {format_steinberg(rhs)}")

    for x, y in oriented_pairs(rs, 3):
        n = structure_constant(rs, simple_root(rs, x), simple_root(rs, y), table)
        report.check(f"oriented:{x},{y}", n == 1, f"N = {n}")

    a = symbol(target, "a")
    if rs.family == "D":
        for root in sorted_roots(rs):
            report.check(f"form:{root_to_text(root)}", preserves_split_form(rs, st_matrix(rs, root, a, table)))

    for k in simple_labels(rs):
        sigma = simple_reflection(rs, k)
        P = perm_matrix(rs, sigma, target)
        for root in sorted_roots(rs):
            eta = conjugation_sign(rs, sigma, root, table)
            param = a if eta > 0 else ring_neg(a)
            moved = st_matrix(rs, weyl_act(sigma, root), param, table)
            conjugated = mat_mul(mat_mul(P, st_matrix(rs, root, a, table)), P.T)
            report.check(f"weyl:{k}:{root_to_text(root)}", matrices_equal(moved, conjugated))

    report.check("idempotent", calibrate(rs, table) == table, ",".join(table.flip_texts()))
    report.check("committed", calibrate(rs) == table, ",".join(calibrate(rs).flip_texts()))
    report.note("sign_free", f"sign_free={str(is_sign_free(rs, table)).lower()}")
    return report.finish()


# =========================
# GARSIDE
# =========================

def _times_t(coeffs, k):
    """Laurent coefficients along the last axis, multiplied by t**k for k = +1 or -1."""
    out = np.zeros_like(coeffs)
    if k > 0:
        out[..., 1:] = coeffs[..., :-1]
    else:
        out[..., :-1] = coeffs[..., 1:]
    return out


def burau_matrix(rs, word):
    """
    Unreduced Burau matrix of a type A braid word, entries exact Laurent
    polynomials in t. Shape (n, n, 2L+1) for L = len(word); the last axis
    holds the coefficients of t^-L .. t^L.
    y_i acts on columns (i, i+1) by [[1-t, t], [1, 0]], y_i^-1 by
    [[0, 1], [1/t, 1-1/t]].
    """
    if rs.family != "A":
        raise InvalidSystem(f"the Burau oracle is defined for type A, not {rs}")
    n, size = rs.n, len(word)
    M = np.zeros((n, n, 2 * size + 1), dtype=np.int64)
    M[np.arange(n), np.arange(n), size] = 1
    for letter in word:
        i = int(letter.label) - 1
        left, right = M[:, i].copy(), M[:, i + 1].copy()
        if letter.exp > 0:
            M[:, i] = left - _times_t(left, 1) + right
            M[:, i + 1] = _times_t(left, 1)
        else:
            M[:, i] = _times_t(right, -1)
            M[:, i + 1] = left + right - _times_t(right, -1)
    return M


def burau_key(rs, word):
    """
    Hashable Burau image of a word: (row, column, degree, coefficient) of
    every nonzero term. Faithful on three strands; on four strands its
    kernel has no short braids, which is all the sweeps below need.
    """
    M = burau_matrix(rs, word)
    rows, cols, degrees = np.nonzero(M)
    return tuple(zip(
        rows.tolist(), cols.tolist(), (degrees - len(word)).tolist(), M[rows, cols, degrees].tolist(),
    ))


def reduced_words(labels, length):
    """Every freely reduced word in the letters y_k, y_k^-1 of length <= `length`, shortest first."""
    letters = [BraidLetter(label, exp) for label in labels for exp in (1, -1)]
    words, layer = [()], [()]
    for _ in range(length):
        layer = [w + (x,) for w in layer for x in letters if not w or w[-1] != (x.label, -x.exp)]
        words.extend(layer)
    return words


def check_garside_oracle(rs, ring=None, positive_length=6, mixed_length=6, stable_length=4, progress=None, **options):
    """
    Garside normal forms against independent oracles:
    - braid relations, free cancellation and Delta words
    - positive words: the classes of the exhaustive rewriting search
    - Br(A_2) and Br(A_3): every freely reduced word up to `mixed_length`,
      classes compared with those of the Burau matrix
    - nf_word spells out the normal form it came from
    """
    report = Report("garside", rs, ring, progress)
    labels = simple_labels(rs)
    for k in labels:
        report.check(f"free:{k}", braid_equal(rs, (BraidLetter(k, 1), BraidLetter(k, -1)), ()))
        report.check(f"free':{k}", braid_equal(rs, (BraidLetter(k, -1), BraidLetter(k, 1)), ()))
    for x, y in oriented_pairs(rs, 2):
        report.check(f"braid:{x},{y}", braid_equal(rs, plain_word([x, y]), plain_word([y, x])))
    for x, y in oriented_pairs(rs, 3):
        report.check(f"braid:{x},{y}", braid_equal(rs, plain_word([x, y, x]), plain_word([y, x, y])))
    delta = delta_word(rs)
    report.check("delta", garside_nf(rs, delta).power == 1 and not garside_nf(rs, delta).factors)

    for size in report.each(range(1, positive_length + 1), "positive words"):
        classes = defaultdict(set)
        for w in itertools.product(labels, repeat=size):
            classes[garside_nf(rs, plain_word(w))].add(w)
        wrong = next((c for c in classes.values() if positive_class(rs, plain_word(min(c))) != c), None)
        report.check(f"positive:{size}", wrong is None, " ".join(min(wrong)) if wrong else None)

    if rs.family == "A" and rs.n in (3, 4):
        words = reduced_words(labels, mixed_length)
        forms = {w: garside_nf(rs, w) for w in report.each(words, "mixed words")}
        keys = {w: burau_key(rs, w) for w in words}
        by_form, by_key = defaultdict(set), defaultdict(set)
        for w in words:
            by_form[forms[w]].add(w)
            by_key[keys[w]].add(w)
        split = next((w for w in words if by_form[forms[w]] != by_key[keys[w]]), None)
        witness = None
        if split is not None:
            other = min(by_form[forms[split]] ^ by_key[keys[split]], key=len)
            witness = f"{format_braid(split)} vs {format_braid(other)}"
        report.check(f"burau:{mixed_length}", split is None, witness)

    unstable = next(
        (w for w in reduced_words(labels, stable_length) if garside_nf(rs, nf_word(rs, garside_nf(rs, w))) != garside_nf(rs, w)),
        None,
    )
    report.check(f"nf-word:{stable_length}", unstable is None, format_braid(unstable) if unstable is not None else None)
    return report.finish()


# =========================
# TWIN AND TWINE (type D)
# =========================

def twine_words(rs):
    """The two sides of the twine identity in Br(D_n), n in {4, 5}."""
    if rs.n == 4:
        return plain_word(["3", "2'", "4", "4"]), plain_word(["3", "4", "4", "2'"])
    return plain_word(["3", "2'", "4", "3", "5", "5"]), plain_word(["3", "4", "5", "5", "2'", "3"])


def twin_words(rs, ring):
    """
    Exact form of the twin identity:
      n^a (n-1) ... 3 2 2'  =  w' 2^a w''
    with w'' = 3 2' 4 ... n and w' the plain word closing the braid parts.
    """
    a = symbol(ring, "a")
    n = rs.n
    chain = [str(k) for k in range(n - 1, 1, -1)] + ["2'"]
    lhs = (ParamLetter(str(n), a),) + plain_letters(chain, ring)
    tail = ["3", "2'"] + [str(k) for k in range(4, n + 1)]
    closing = pi(lhs) + tuple(BraidLetter(l, -1) for l in reversed(["2"] + tail))
    omega = tuple(ParamLetter(l.label, ring_zero(ring), l.exp) for l in closing)
    rhs = omega + (ParamLetter("2", a),) + plain_letters(tail, ring)
    return lhs, rhs


def check_twin_twine(rs, ring, prover=True, max_steps=None, progress=None, **options):
    report = Report("twin", rs, ring, progress)
    if rs.family != "D" or rs.n not in (4, 5):
        report.skip("twin", "twin and twine are stated for D_4 and D_5")
        return report.finish()
    target = symbolic(ring, ("a",))
    left, right = twine_words(rs)
    report.check(f"twine:{rs.n}", braid_equal(rs, left, right))
    if prover:
        u, v = (plain_letters([l.label for l in side], target) for side in (left, right))
        report.attempt(f"twine:{rs.n}:prover", lambda: prove_equal(rs, target, u, v, max_steps=_suite_steps(max_steps)))

    lhs, rhs = twin_words(rs, target)
    images = phi(rs, target, lhs), phi(rs, target, rhs)
    report.check(f"twin:{rs.n}:matrix", sd_equal(rs, target, *images), _sd_witness(*images))
    report.check(f"twin:{rs.n}:plain", braid_equal(rs, pi(lhs), pi(rhs)))
    if prover:
        report.attempt(
            f"twin:{rs.n}:prover",
            lambda: prove_equal(rs, target, lhs, rhs, max_steps=_suite_steps(max_steps)),
        )
    return report.finish()


# =========================
# PROVER CERTIFICATES
# =========================

def a1_consequences(rs, ring, label):
    """The three consequences of (A1): commuting y^0 y^0, merging through (y^0)^-1, inverse expansion."""
    a, b = symbol(ring, "a"), symbol(ring, "b")
    zero = ring_zero(ring)

    def y(param, exp=1):
        return ParamLetter(label, param, exp)

    return [
        ((y(zero), y(zero), y(a)), (y(a), y(zero), y(zero))),
        ((y(a), y(zero, -1), y(b)), (y(a + b),)),
        ((y(a, -1),), (y(zero, -1), y(ring_neg(a)), y(zero, -1))),
    ]


def check_prover_certificates(rs, ring, max_steps=None, progress=None, **options):
    """
    - every shortcut replays from the base rules
    - the (A1) consequences are derivable
    - y_k^a (y_k^0)^-1 commutes with every pure braid generator (bounded search)
    """
    report = Report("prover", rs, ring, progress)
    for name, error in sorted(verify_shortcuts(rs).items()):
        report.check(f"shortcut:{name}", error is None, error)

    target = symbolic(ring, ("a", "b"))
    steps = _suite_steps(max_steps)
    for k in simple_labels(rs):
        for i, (u, v) in enumerate(a1_consequences(rs, target, k)):
            report.attempt(
                f"a1-consequence:{i + 1}:{k}",
                lambda u=u, v=v: prove_equal(rs, target, u, v, max_steps=steps, shortcuts=False),
            )
    pairs = [(name, omega, k) for name, omega in pure_braid_gens(rs) for k in simple_labels(rs)]
    for name, omega, k in report.each(pairs, "certificates"):
        report.attempt(
            f"commute:{name}:{k}",
            lambda omega=omega, k=k: certify_commutation(rs, target, k, omega, max_steps=steps),
        )
    return report.finish()


# =========================
# REGISTRY
# =========================

SUITES = {
    "phi": check_phi_well_defined,
    "pbl": check_pure_braid_lemma,
    "psi": check_psi_independence,
    "roundtrip": check_psi_roundtrip,
    "kr": check_kassel_reutenauer,
    "paint": check_paint_relations,
    "paint_vs_phi": check_paint_vs_phi,
    "calibration": check_calibration,
    "garside": check_garside_oracle,
    "twin": check_twin_twine,
    "prover": check_prover_certificates,
}

# statement -> (suite, family, rank, check id prefix) runs that exercise it
COVERAGE = {
    "relation A1": [("phi", "A", 3, "A1["), ("paint", "A", 2, "A1[")],
    "relation A1xA1": [("phi", "A", 3, "A1xA1["), ("phi", "D", 3, "A1xA1[")],
    "relation A2": [("phi", "A", 3, "A2["), ("paint", "A", 2, "A2[")],
    "phi homomorphism (type A)": [("phi", "A", 3, "A2[")],
    "phi homomorphism (type D)": [("phi", "D", 4, "A2[")],
    "phi and psi inverse": [("roundtrip", "A", 3, "phi-psi:"), ("roundtrip", "D", 3, "psi-phi:")],
    "psi independent of the lift": [("psi", "A", 2, "lift:"), ("psi", "D", 3, "lift:")],
    "conjugation covariance": [("psi", "A", 3, "conj:")],
    "A1 consequences": [("prover", "A", 1, "a1-consequence:"), ("roundtrip", "A", 2, "expand-inverse:")],
    "pure braid lemma (type A)": [("pbl", "A", 3, "matrix:"), ("prover", "A", 3, "commute:")],
    "pure braid lemma (type D)": [("pbl", "D", 4, "matrix:b{")],
    "kassel-reutenauer quotient": [("kr", "A", 3, "additive[")],
    "painted model and phi": [("paint_vs_phi", "A", 3, "word:")],
    "noncommutative witness": [("paint", "A", 2, "witness:b+ca")],
    "steinberg relations": [("calibration", "D", 3, "St2["), ("calibration", "A", 2, "St2[")],
    "garside word problem": [
        ("garside", "A", 2, "burau:6"), ("garside", "A", 3, "burau:6"), ("garside", "A", 3, "positive:"),
    ],
    "twin": [("twin", "D", 4, "twin:4:matrix")],
    "twine": [("twin", "D", 4, "twine:4"), ("twin", "D", 5, "twine:5"), ("twin", "D", 4, "twine:4:prover")],
    "rel1": [("prover", "D", 4, "shortcut:rel1[")],
    "rel2": [("prover", "D", 4, "shortcut:rel2[")],
    "rel3": [("prover", "D", 4, "shortcut:rel3[")],
    "rel4": [("prover", "D", 4, "shortcut:rel4[")],
    "rel5": [("prover", "D", 4, "shortcut:rel2[3,4]")],
    "rel6": [("prover", "D", 4, "shortcut:rel3[3,4]")],
    "rel7": [("prover", "D", 4, "shortcut:rel7[")],
    "rel8": [("prover", "D", 4, "shortcut:rel8[")],
    "rel9": [("prover", "D", 4, "shortcut:rel9[")],
    "rel10": [("prover", "D", 4, "shortcut:rel10[")],
}


def run_suite(name, rs, ring, **options):
    try:
        suite = SUITES[name]
    except KeyError:
        raise ParabraidError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return suite(rs, ring, **options)
