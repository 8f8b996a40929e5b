"""
The parametrized braid group Br(Phi, A).

- words are tuples of ParamLetter(label, param, exp)
- relation_instances builds the (A1), (A1xA1) and (A2) relations
- phi maps words into St(Phi, A) x| Br(Phi), psi goes back
- pi forgets the parameters
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import NamedTuple

from .braid import BraidLetter, garside_nf, nf_word
from .errors import InvalidSystem, MalformedWord
from .ring import (
    POLY,
    elements,
    is_zero,
    ring_add,
    ring_mul,
    ring_neg,
    ring_zero,
    substitute,
    symbol,
    to_text,
    with_symbols,
)
from .rootsys import (
    FORK,
    oriented_pairs,
    simple_labels,
    simple_reflection,
    simple_root,
    weyl_to_simple_choices,
    weyl_to_simple_word,
)
from .steinberg import SemidirectElem, StLetter, fold, sd_identity, sd_mul, weyl_act_st

logger = logging.getLogger(__name__)

RELATION_SYMBOLS = ("a", "b", "c")


class ParamLetter(NamedTuple):
    label: str
    param: object
    exp: int = 1


@dataclass(frozen=True)
class RelationInstance:
    name: str
    lhs: tuple
    rhs: tuple
    bindings: dict = field(default_factory=dict, hash=False, compare=False)


def plain_letters(labels, ring, exp=1):
    zero = ring_zero(ring)
    return tuple(ParamLetter(label, zero, exp) for label in labels)


def format_word(word):
    """Text form accepted back by the word parser; zero parameters print as plain letters."""
    if not word:
        return "1"
    parts = []
    for letter in word:
        text = "y" + letter.label.replace(FORK, "2p")
        if not is_zero(letter.param):
            text += f"[{to_text(letter.param)}]"
        if letter.exp < 0:
            text += "^-1"
        parts.append(text)
    return " ".join(parts)


def check_param_word(rs, word):
    labels = simple_labels(rs)
    for letter in word:
        if letter.label not in labels or letter.exp not in (1, -1):
            raise MalformedWord(f"bad letter {letter!r} for {rs}")
    return word


def word_inverse(word):
    return tuple(ParamLetter(l.label, l.param, -l.exp) for l in reversed(word))


def expand_inverse(word):
    """Rewrite (y^a)^-1 as (y^0)^-1 y^-a (y^0)^-1 for every a != 0."""
    out = []
    for letter in word:
        if letter.exp > 0 or is_zero(letter.param):
            out.append(letter)
            continue
        zero = ring_zero(letter.param.descriptor)
        out.extend([
            ParamLetter(letter.label, zero, -1),
            ParamLetter(letter.label, ring_neg(letter.param), 1),
            ParamLetter(letter.label, zero, -1),
        ])
    return tuple(out)


def specialize(word, bindings, target):
    """Substitute symbol values into every parameter of `word`."""
    return tuple(ParamLetter(l.label, substitute(l.param, bindings, target), l.exp) for l in word)


# =========================
# RELATIONS
# =========================

def symbolic_ring(ring):
    """`ring` with the relation symbols a, b, c available."""
    return with_symbols(ring, RELATION_SYMBOLS)


def _parameter_sets(ring):
    if ring.kind == POLY:
        ring = symbolic_ring(ring)
        return ring, [{name: symbol(ring, name) for name in RELATION_SYMBOLS}]
    values = elements(ring)
    return ring, [dict(zip(RELATION_SYMBOLS, combo)) for combo in itertools.product(values, repeat=3)]


def _suffix(bindings, symbolic):
    if symbolic:
        return ""
    return "(" + ",".join(f"{k}={to_text(v)}" for k, v in bindings.items()) + ")"


def relation_instances(rs, ring):
    """
    Every relation of Br(rs, ring) per applicable simple index or pair.
    Polynomial rings get one symbolic instance in a, b, c; concrete rings
    get one instance per triple of sample elements.
    - A1:    y^a y^0 y^b = y^0 y^0 y^(a+b)
    - A1xA1: y_al^a y_be^b = y_be^b y_al^a        (m = 2)
    - A2:    y_al^a y_be^b y_al^c = y_be^c y_al^(b+ac) y_be^a   (m = 3, al < be)
    """
    if rs.family == "D" and not ring.is_commutative:
        raise InvalidSystem("type D needs a commutative ring")
    ring, parameter_sets = _parameter_sets(ring)
    symbolic = ring.kind == POLY
    zero = ring_zero(ring)
    out = []
    for bindings in parameter_sets:
        a, b, c = bindings["a"], bindings["b"], bindings["c"]
        tail = _suffix(bindings, symbolic)
        for label in simple_labels(rs):
            out.append(RelationInstance(
                f"A1[{label}]{tail}",
                (ParamLetter(label, a), ParamLetter(label, zero), ParamLetter(label, b)),
                (ParamLetter(label, zero), ParamLetter(label, zero), ParamLetter(label, ring_add(a, b))),
                {"a": a, "b": b},
            ))
        for al, be in oriented_pairs(rs, 2):
            out.append(RelationInstance(
                f"A1xA1[{al},{be}]{tail}",
                (ParamLetter(al, a), ParamLetter(be, b)),
                (ParamLetter(be, b), ParamLetter(al, a)),
                {"a": a, "b": b},
            ))
        for al, be in oriented_pairs(rs, 3):
            out.append(RelationInstance(
                f"A2[{al},{be}]{tail}",
                (ParamLetter(al, a), ParamLetter(be, b), ParamLetter(al, c)),
                (ParamLetter(be, c), ParamLetter(al, ring_add(b, ring_mul(a, c))), ParamLetter(be, a)),
                dict(bindings),
            ))
    return out


# =========================
# PI AND PHI
# =========================

def pi(word):
    return tuple(BraidLetter(letter.label, letter.exp) for letter in word)


def phi_letter(rs, letter, signed=False, table=None):
    """
    y^a -> (x_al(a), y); a formal inverse maps to the group inverse
    (sigma . x_al(-a), y^-1), which is also the image of its (A1) expansion.
    """
    alpha = simple_root(rs, letter.label)
    steinberg = () if is_zero(letter.param) else (StLetter(alpha, letter.param),)
    if letter.exp > 0:
        return SemidirectElem(steinberg, (BraidLetter(letter.label, 1),))
    inverse = tuple(StLetter(l.root, ring_neg(l.param)) for l in steinberg)
    sigma = simple_reflection(rs, letter.label)
    twisted = weyl_act_st(rs, sigma, inverse, signed=signed, table=table)
    return SemidirectElem(twisted, (BraidLetter(letter.label, -1),))


def phi(rs, ring, word, signed=False, table=None):
    """Image of a parametrized word in St(rs, ring) x| Br(rs); the braid part is pi(word)."""
    check_param_word(rs, word)
    if rs.family == "D" and not ring.is_commutative:
        raise InvalidSystem("type D needs a commutative ring")
    result = sd_identity()
    for letter in word:
        result = sd_mul(rs, result, phi_letter(rs, letter, signed, table), signed=signed, table=table)
    return result


def normalize(rs, ring, word, table=None):
    """phi with the Steinberg part folded and the braid part in Garside normal form."""
    image = phi(rs, ring, word, table=table)
    return SemidirectElem(fold(image.st), nf_word(rs, garside_nf(rs, image.br)))


# =========================
# PSI
# =========================

def psi_simple(rs, label, a):
    """y_al^a (y_al^0)^-1."""
    simple_root(rs, label)
    return (ParamLetter(label, a, 1), ParamLetter(label, ring_zero(a.descriptor), -1))


def _conjugate(word, lift, ring):
    omega = plain_letters(lift, ring)
    return omega + word + word_inverse(omega)


def psi_general(rs, root, a):
    """
    omega . psi_simple(beta, a) . omega^-1 where w(root) = beta is simple
    and omega is the positive lift of w^-1.
    """
    word, target = weyl_to_simple_word(rs, root)
    return _conjugate(psi_simple(rs, target, a), tuple(reversed(word)), a.descriptor)


def psi_lifts(rs, root, a, limit=4):
    """
    Alternative psi values of x_root(a) through different (w, lift) choices.
    A padded lift omega y_t y_t is always included.
    """
    out = []
    for word, target in weyl_to_simple_choices(rs, root)[:limit]:
        lift = tuple(reversed(word))
        out.append(_conjugate(psi_simple(rs, target, a), lift, a.descriptor))
    word, target = weyl_to_simple_word(rs, root)
    padded = tuple(reversed(word)) + (target, target)
    out.append(_conjugate(psi_simple(rs, target, a), padded, a.descriptor))
    return out


def psi(rs, ring, elem):
    """psi of every Steinberg letter in order, followed by the braid part with zero parameters."""
    word = ()
    for letter in elem.st:
        word += psi_general(rs, letter.root, letter.param)
    zero = ring_zero(ring)
    return word + tuple(ParamLetter(l.label, zero, l.exp) for l in elem.br)