"""
Bounded equality prover for Br(Phi, A).

Rules are concrete instances of the defining relations over the simple
indices of a system, each usable forward (lhs -> rhs) and backward. A
derivation is a list of steps (rule, orientation, position, bindings) that
replays exactly from the start word to the end word. Search is a
bidirectional breadth-first search bounded by the number of expanded words
and by the word length; running out of budget raises NotFound, which proves
nothing.

Shortcuts are derived rules (the (A1) consequences, commutation of mixed
inverse letters, the D-type moves rel1-rel10). Every shortcut carries a
stored derivation from the base rules which `verify_shortcuts` replays.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import NamedTuple

from django.conf import settings

from .errors import NotFound, ReplayError
from .parsing import parse_ring, parse_ring_expr, parse_word
from .pbg import ParamLetter, check_param_word, format_word, phi
from .ring import is_zero, poly, ring_add, ring_mul, ring_neg, ring_sub, ring_zero, symbol, to_text
from .rootsys import FORK, oriented_pairs, simple_labels, system_from_rank
from .schemas import DerivationRecord, DerivationStep
from .steinberg import sd_equal

logger = logging.getLogger(__name__)

FORWARD = "forward"
BACKWARD = "backward"


# =========================
# PARAMETER EXPRESSIONS
# =========================

@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


ZERO = Zero()
P, Q, R = Var("p"), Var("q"), Var("r")


def expr_vars(expr):
    if isinstance(expr, Var):
        return (expr.name,)
    if isinstance(expr, (Add, Mul)):
        return expr_vars(expr.left) + expr_vars(expr.right)
    if isinstance(expr, Neg):
        return expr_vars(expr.arg)
    return ()


def evaluate(expr, bindings, ring):
    if isinstance(expr, Zero):
        return ring_zero(ring)
    if isinstance(expr, Var):
        return bindings[expr.name]
    if isinstance(expr, Add):
        return ring_add(evaluate(expr.left, bindings, ring), evaluate(expr.right, bindings, ring))
    if isinstance(expr, Mul):
        return ring_mul(evaluate(expr.left, bindings, ring), evaluate(expr.right, bindings, ring))
    return ring_neg(evaluate(expr.arg, bindings, ring))


def _unbound(expr, bindings):
    return [name for name in expr_vars(expr) if name not in bindings]


def solve(expr, value, bindings, ring):
    """
    Extend `bindings` so that expr evaluates to `value`.
    A sum with unknowns on both sides gives the remainder to the left part
    and 0 to the rest. Products are never solved for.
    """
    if isinstance(expr, Zero):
        return is_zero(value)
    if isinstance(expr, Var):
        if expr.name in bindings:
            return bindings[expr.name] == value
        bindings[expr.name] = value
        return True
    if isinstance(expr, Neg):
        return solve(expr.arg, ring_neg(value), bindings, ring)
    if isinstance(expr, Mul):
        if _unbound(expr, bindings):
            return False
        return evaluate(expr, bindings, ring) == value
    if _unbound(expr.left, bindings) and _unbound(expr.right, bindings):
        for name in _unbound(expr.right, bindings):
            bindings[name] = ring_zero(ring)
    if not _unbound(expr.right, bindings):
        return solve(expr.left, ring_sub(value, evaluate(expr.right, bindings, ring)), bindings, ring)
    return solve(expr.right, ring_sub(value, evaluate(expr.left, bindings, ring)), bindings, ring)


# =========================
# RULES
# =========================

class PatternLetter(NamedTuple):
    label: str
    expr: object
    exp: int = 1


class RewriteRule(NamedTuple):
    name: str
    lhs: tuple
    rhs: tuple

    def sides(self, orientation):
        return (self.lhs, self.rhs) if orientation == FORWARD else (self.rhs, self.lhs)


class Step(NamedTuple):
    rule: str
    orientation: str
    position: int
    bindings: tuple = ()

    def inverted(self):
        flipped = BACKWARD if self.orientation == FORWARD else FORWARD
        return Step(self.rule, flipped, self.position, self.bindings)


@dataclass(frozen=True)
class Derivation:
    start: tuple
    end: tuple
    steps: tuple


def _pl(label, expr=ZERO, exp=1):
    return PatternLetter(label, expr, exp)


def format_expr(expr):
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Add):
        return f"{format_expr(expr.left)}+{format_expr(expr.right)}"
    if isinstance(expr, Mul):
        return f"{format_expr(expr.left)}*{format_expr(expr.right)}"
    if isinstance(expr, Neg):
        return f"-{format_expr(expr.arg)}"
    return "0"


def format_rule(rule):
    """Both sides in word syntax, e.g. 'y1[p] y1 y1[q] = y1 y1 y1[p+q]'."""
    def side(letters):
        if not letters:
            return "1"
        parts = []
        for p in letters:
            text = "y" + p.label.replace(FORK, "2p")
            if not isinstance(p.expr, Zero):
                text += f"[{format_expr(p.expr)}]"
            parts.append(text + ("^-1" if p.exp < 0 else ""))
        return " ".join(parts)

    return f"{side(rule.lhs)} = {side(rule.rhs)}"


def base_rules(rs):
    """(A1), (A1xA1), (A2) plus free reduction and inverse expansion."""
    rules = []
    for k in simple_labels(rs):
        rules.append(RewriteRule(f"A1[{k}]", (_pl(k, P), _pl(k), _pl(k, Q)), (_pl(k), _pl(k), _pl(k, Add(P, Q)))))
        rules.append(RewriteRule(f"free[{k}]", (_pl(k, P), _pl(k, P, -1)), ()))
        rules.append(RewriteRule(f"free'[{k}]", (_pl(k, P, -1), _pl(k, P)), ()))
        rules.append(RewriteRule(f"inv[{k}]", (_pl(k, P, -1),), (_pl(k, exp=-1), _pl(k, Neg(P)), _pl(k, exp=-1))))
    for x, y in oriented_pairs(rs, 2):
        rules.append(RewriteRule(f"A1xA1[{x},{y}]", (_pl(x, P), _pl(y, Q)), (_pl(y, Q), _pl(x, P))))
    for x, y in oriented_pairs(rs, 3):
        rules.append(RewriteRule(
            f"A2[{x},{y}]",
            (_pl(x, P), _pl(y, Q), _pl(x, R)),
            (_pl(y, R), _pl(x, Add(Q, Mul(P, R))), _pl(y, P)),
        ))
    return rules


def _shortcuts(rs):
    """
    (rule, stored steps) pairs. Stored steps are (rule, orientation,
    position, {variable: symbol}) over the symbols a (for p) and b (for q).
    """
    out = []
    for k in simple_labels(rs):
        out.append((
            RewriteRule(f"merge[{k}]", (_pl(k, P), _pl(k, exp=-1), _pl(k, Q)), (_pl(k, Add(P, Q)),)),
            [
                (f"free'[{k}]", BACKWARD, 0, {}),
                (f"free'[{k}]", BACKWARD, 1, {}),
                (f"A1[{k}]", BACKWARD, 2, {}),
                (f"free[{k}]", FORWARD, 4, {}),
                (f"A1[{k}]", FORWARD, 2, {}),
                (f"free'[{k}]", FORWARD, 1, {}),
                (f"free'[{k}]", FORWARD, 0, {}),
            ],
        ))
        out.append((
            RewriteRule(f"rel1[{k}]", (_pl(k, P), _pl(k), _pl(k)), (_pl(k), _pl(k), _pl(k, P))),
            [(f"A1[{k}]", FORWARD, 0, {})],
        ))
    for x, y in oriented_pairs(rs, 2):
        comm = f"A1xA1[{x},{y}]"
        out.append((
            RewriteRule(f"comm+-[{x},{y}]", (_pl(x, P), _pl(y, Q, -1)), (_pl(y, Q, -1), _pl(x, P))),
            [
                (f"free'[{y}]", BACKWARD, 0, {"p": "b"}),
                (comm, BACKWARD, 1, {}),
                (f"free[{y}]", FORWARD, 2, {}),
            ],
        ))
        out.append((
            RewriteRule(f"comm-+[{x},{y}]", (_pl(x, P, -1), _pl(y, Q)), (_pl(y, Q), _pl(x, P, -1))),
            [
                (f"free[{x}]", BACKWARD, 2, {"p": "a"}),
                (comm, BACKWARD, 1, {}),
                (f"free'[{x}]", FORWARD, 0, {}),
            ],
        ))
        out.append((
            RewriteRule(f"comm--[{x},{y}]", (_pl(x, P, -1), _pl(y, Q, -1)), (_pl(y, Q, -1), _pl(x, P, -1))),
            [
                (f"free'[{y}]", BACKWARD, 0, {"p": "b"}),
                (f"free'[{x}]", BACKWARD, 1, {"p": "a"}),
                (comm, FORWARD, 2, {}),
                (f"free[{x}]", FORWARD, 3, {}),
                (f"free[{y}]", FORWARD, 2, {}),
            ],
        ))
    for x, y in oriented_pairs(rs, 3):
        a2 = f"A2[{x},{y}]"
        pair = f"[{x},{y}]"
        out.extend([
            # y^a x y = x y x^a
            (RewriteRule(f"rel2{pair}", (_pl(y, P), _pl(x), _pl(y)), (_pl(x), _pl(y), _pl(x, P))),
             [(a2, BACKWARD, 0, {})]),
            (RewriteRule(
                f"rel3{pair}",
                (_pl(y, P), _pl(x), _pl(y, exp=-1)),
                (_pl(x), _pl(y), _pl(x, P), _pl(y, exp=-1), _pl(y, exp=-1)),
            ), [(f"free[{y}]", BACKWARD, 2, {}), (a2, BACKWARD, 0, {})]),
            (RewriteRule(f"rel4{pair}", (_pl(x, P), _pl(y), _pl(x)), (_pl(y), _pl(x), _pl(y, P))),
             [(a2, FORWARD, 0, {})]),
            (RewriteRule(
                f"rel7{pair}",
                (_pl(x, P), _pl(y), _pl(x, exp=-1)),
                (_pl(y), _pl(x), _pl(y, P), _pl(x, exp=-1), _pl(x, exp=-1)),
            ), [(f"free[{x}]", BACKWARD, 2, {}), (a2, FORWARD, 0, {})]),
            (RewriteRule(
                f"rel8{pair}",
                (_pl(x, P), _pl(y, exp=-1), _pl(x, exp=-1)),
                (_pl(y, exp=-1), _pl(x, exp=-1), _pl(y, P)),
            ), [
                (f"free'[{y}]", BACKWARD, 0, {}),
                (f"free'[{x}]", BACKWARD, 1, {}),
                (a2, FORWARD, 2, {}),
                (f"free[{y}]", FORWARD, 4, {}),
                (f"free[{x}]", FORWARD, 3, {}),
            ]),
            (RewriteRule(
                f"rel9{pair}",
                (_pl(y, P), _pl(x, exp=-1), _pl(y, exp=-1)),
                (_pl(x, exp=-1), _pl(y, exp=-1), _pl(x, P)),
            ), [
                (f"free'[{x}]", BACKWARD, 0, {}),
                (f"free'[{y}]", BACKWARD, 1, {}),
                (a2, BACKWARD, 2, {}),
                (f"free[{x}]", FORWARD, 4, {}),
                (f"free[{y}]", FORWARD, 3, {}),
            ]),
            (RewriteRule(
                f"rel10{pair}",
                (_pl(y, P), _pl(y), _pl(x)),
                (_pl(x), _pl(y), _pl(x, P), _pl(x), _pl(y, exp=-1)),
            ), [
                (f"free[{y}]", BACKWARD, 3, {}),
                (a2, BACKWARD, 1, {}),
                (a2, BACKWARD, 0, {}),
            ]),
        ])
    return out


def rule_set(rs, ring=None, shortcuts=True):
    """Every rule of the system in a fixed order: base rules, then shortcuts."""
    rules = base_rules(rs)
    if shortcuts:
        rules.extend(rule for rule, _ in _shortcuts(rs))
    return rules


# =========================
# APPLYING RULES
# =========================

def _match(source, segment, bindings, ring):
    for pattern, letter in zip(source, segment):
        if pattern.label != letter.label or pattern.exp != letter.exp:
            return None
    for pattern, letter in zip(source, segment):
        if isinstance(pattern.expr, Var) and not solve(pattern.expr, letter.param, bindings, ring):
            return None
    for pattern, letter in zip(source, segment):
        if not isinstance(pattern.expr, Var) and not solve(pattern.expr, letter.param, bindings, ring):
            return None
    return bindings


def apply_rule(rule, orientation, word, position, ring, bindings=None):
    """
    Rewrite `word` at `position`. Returns (new word, bindings) or None.
    Target variables left unbound by the match default to 0.
    """
    source, target = rule.sides(orientation)
    segment = word[position:position + len(source)]
    if len(segment) != len(source) or position > len(word):
        return None
    found = _match(source, segment, dict(bindings or {}), ring)
    if found is None:
        return None
    for pattern in target:
        for name in expr_vars(pattern.expr):
            found.setdefault(name, ring_zero(ring))
    replacement = tuple(ParamLetter(p.label, evaluate(p.expr, found, ring), p.exp) for p in target)
    return word[:position] + replacement + word[position + len(source):], found


def _rule_index(rules):
    index, insertions = defaultdict(list), []
    for rule in rules:
        for orientation in (FORWARD, BACKWARD):
            source, _ = rule.sides(orientation)
            if source:
                index[(source[0].label, source[0].exp)].append((rule, orientation))
            else:
                insertions.append((rule, orientation))
    return index, insertions


def _neighbours(word, index, insertions, ring, max_len):
    for i, letter in enumerate(word):
        for rule, orientation in index.get((letter.label, letter.exp), ()):
            result = apply_rule(rule, orientation, word, i, ring)
            if result and len(result[0]) <= max_len:
                yield result[0], Step(rule.name, orientation, i, tuple(sorted(result[1].items())))
    if len(word) + 2 > max_len:
        return
    for i in range(len(word) + 1):
        for rule, orientation in insertions:
            result = apply_rule(rule, orientation, word, i, ring)
            if result:
                yield result[0], Step(rule.name, orientation, i, tuple(sorted(result[1].items())))


def replay(rs, ring, derivation, shortcuts=True):
    """Re-apply every step; the end word must be reached exactly."""
    rules = {rule.name: rule for rule in rule_set(rs, ring, shortcuts)}
    word = tuple(derivation.start)
    for number, step in enumerate(derivation.steps):
        rule = rules.get(step.rule)
        if rule is None:
            raise ReplayError(f"step {number}: unknown rule {step.rule!r}")
        if step.orientation not in (FORWARD, BACKWARD):
            raise ReplayError(f"step {number}: bad orientation {step.orientation!r}")
        result = apply_rule(rule, step.orientation, word, step.position, ring, dict(step.bindings))
        if result is None:
            raise ReplayError(f"step {number}: {step.rule} does not apply at position {step.position}")
        word = result[0]
    if word != tuple(derivation.end):
        raise ReplayError("replay does not reach the end word")
    return word


# =========================
# SEARCH
# =========================

def _bounds(u, v, max_steps, max_len):
    if max_steps is None:
        max_steps = settings.PARABRAID_MAX_STEPS
    if max_len is None:
        max_len = settings.PARABRAID_MAX_LEN or max(len(u), len(v)) + 8
    return max_steps, max_len


def _path(parents, word):
    steps = []
    while parents[word] is not None:
        word, step = parents[word]
        steps.append(step)
    return steps


def prove_equal(rs, ring, u, v, max_steps=None, max_len=None, shortcuts=True):
    """
    Derivation from u to v, or NotFound when the bounds run out.
    Deterministic: rules in rule_set order, positions left to right, the
    smaller frontier expanded first.
    """
    u, v = tuple(check_param_word(rs, u)), tuple(check_param_word(rs, v))
    max_steps, max_len = _bounds(u, v, max_steps, max_len)
    if u == v:
        return Derivation(u, v, ())

    index, insertions = _rule_index(rule_set(rs, ring, shortcuts))
    parents = ({u: None}, {v: None})
    frontiers = ([u], [v])
    expanded = 0
    meet = None
    while meet is None and frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        grown = []
        for word in frontiers[side]:
            if expanded >= max_steps:
                break
            expanded += 1
            if expanded % 50000 == 0:
                logger.debug("prover: %d expanded, %d seen", expanded, len(parents[0]) + len(parents[1]))
            for new, step in _neighbours(word, index, insertions, ring, max_len):
                if new in parents[side]:
                    continue
                parents[side][new] = (word, step)
                if new in parents[1 - side]:
                    meet = new
                    break
                grown.append(new)
            if meet is not None:
                break
        if meet is None and expanded >= max_steps:
            break
        frontiers[side][:] = grown

    if meet is None:
        seen = len(parents[0]) + len(parents[1])
        logger.info("prover: bounds exhausted after %d expansions (%d words seen)", expanded, seen)
        raise NotFound(expanded, seen, max_steps, max_len)

    forward = list(reversed(_path(parents[0], meet)))
    backward = [step.inverted() for step in _path(parents[1], meet)]
    derivation = Derivation(u, v, tuple(forward + backward))
    replay(rs, ring, derivation, shortcuts)
    _check_images(rs, ring, u, v)
    logger.debug("prover: %d steps after %d expansions", len(derivation.steps), expanded)
    return derivation


def _check_images(rs, ring, u, v):
    if rs.family == "D" and not ring.is_commutative:
        return
    if not sd_equal(rs, ring, phi(rs, ring, u), phi(rs, ring, v)):
        raise ReplayError("derivation found for words with different images")


def certify_commutation(rs, ring, label, omega, max_steps=None, max_len=None, shortcuts=True):
    """
    Derivation of y_k^a (y_k^0)^-1 . omega = omega . y_k^a (y_k^0)^-1 for a
    plain braid word omega, with a the symbol 'a' of `ring`.
    """
    a = symbol(ring, "a")
    zero = ring_zero(ring)
    spill = (ParamLetter(label, a, 1), ParamLetter(label, zero, -1))
    word = tuple(ParamLetter(letter.label, zero, letter.exp) for letter in omega)
    return prove_equal(rs, ring, spill + word, word + spill, max_steps, max_len, shortcuts)


# =========================
# STORED SHORTCUT DERIVATIONS
# =========================

def shortcut_ring():
    return poly(("a", "b"))


def shortcut_derivations(rs):
    """Base-rule derivation of every shortcut, over Z[a, b]."""
    ring = shortcut_ring()
    values = {"a": symbol(ring, "a"), "b": symbol(ring, "b")}
    start_bindings = {"p": values["a"], "q": values["b"]}
    out = {}
    for rule, stored in _shortcuts(rs):
        start = tuple(ParamLetter(p.label, evaluate(p.expr, start_bindings, ring), p.exp) for p in rule.lhs)
        end = tuple(ParamLetter(p.label, evaluate(p.expr, start_bindings, ring), p.exp) for p in rule.rhs)
        steps = tuple(
            Step(name, orientation, position, tuple(sorted((var, values[sym]) for var, sym in binds.items())))
            for name, orientation, position, binds in stored
        )
        out[rule.name] = Derivation(start, end, steps)
    return out


def verify_shortcuts(rs):
    """Replay every stored shortcut derivation with base rules only. Returns {name: error or None}."""
    ring = shortcut_ring()
    results = {}
    for name, derivation in shortcut_derivations(rs).items():
        try:
            replay(rs, ring, derivation, shortcuts=False)
            results[name] = None
        except ReplayError as e:
            results[name] = str(e)
    return results


# =========================
# RECORDS
# =========================

def derivation_to_record(rs, ring, derivation, shortcuts=True):
    return DerivationRecord(
        family=rs.family,
        rank=rs.rank,
        ring=str(ring),
        shortcuts=shortcuts,
        start=format_word(derivation.start),
        end=format_word(derivation.end),
        steps=[
            DerivationStep(
                rule=step.rule,
                orientation=step.orientation,
                position=step.position,
                bindings={name: to_text(value) for name, value in step.bindings},
            )
            for step in derivation.steps
        ],
    )


def derivation_from_record(record):
    """(system, ring, derivation, shortcuts) read back from a DerivationRecord."""
    rs = system_from_rank(record.family, record.rank)
    ring = parse_ring(record.ring)
    steps = tuple(
        Step(
            step.rule,
            step.orientation,
            step.position,
            tuple(sorted((name, parse_ring_expr(ring, text)) for name, text in step.bindings.items())),
        )
        for step in record.steps
    )
    derivation = Derivation(parse_word(rs, ring, record.start), parse_word(rs, ring, record.end), steps)
    return rs, ring, derivation, record.shortcuts
