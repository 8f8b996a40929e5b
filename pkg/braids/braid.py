"""
Unparametrized braid groups Br(Phi): words, Weyl images, pure braid
generators and the word problem through the left-greedy Garside normal form.

A word is a tuple of BraidLetter(label, exp) with exp in {+1, -1}.
Simple elements of the Garside structure are Weyl group elements and the
Garside element Delta is the lift of the longest element w0.
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import MalformedWord
from .rootsys import (
    FORK,
    coxeter_m,
    label_order,
    left_descents,
    longest_element,
    reduced_word,
    right_descents,
    simple_labels,
    simple_reflection,
    weyl_identity,
    weyl_mul,
    weyl_product,
)

logger = logging.getLogger(__name__)


class BraidLetter(NamedTuple):
    label: str
    exp: int = 1


@dataclass(frozen=True)
class GarsideNF:
    power: int
    factors: tuple

    def __str__(self):
        body = " ".join(str(f) for f in self.factors)
        return f"Delta^{self.power}" + (f" {body}" if body else "")


def plain_word(labels, exp=1):
    return tuple(BraidLetter(label, exp) for label in labels)


def check_word(rs, word):
    labels = simple_labels(rs)
    for letter in word:
        if letter.label not in labels or letter.exp not in (1, -1):
            raise MalformedWord(f"bad letter {letter!r} for {rs}")
    return word


def format_braid(word):
    if not word:
        return "1"
    return " ".join(
        "y" + letter.label.replace(FORK, "2p") + ("^-1" if letter.exp < 0 else "")
        for letter in word
    )


def free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1].label == letter.label and out[-1].exp == -letter.exp:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def braid_inverse(word):
    return tuple(BraidLetter(letter.label, -letter.exp) for letter in reversed(word))


# =========================
# WEYL IMAGE AND PURE BRAIDS
# =========================

def weyl_image(rs, word):
    return weyl_product(rs, [letter.label for letter in word])


def is_pure(rs, word):
    return weyl_image(rs, word) == weyl_identity(rs)


def braid_word_from_weyl(rs, w):
    """Positive lift of w through its lexicographically smallest reduced word."""
    return plain_word(reduced_word(rs, w))


def delta_word(rs):
    return braid_word_from_weyl(rs, longest_element(rs))


def _reflect(path, middle):
    """path . middle . reversed(path), the reflection form of a conjugate."""
    return plain_word(list(path) + list(middle) + list(reversed(path)))


def _chain_down(j, i):
    return [str(k) for k in range(j, i, -1)]


def pure_braid_gens(rs):
    """
    Named generators of PBr(rs) in reflection form.
    - A: a{j,i} = j (j-1) ... i i ... (j-1) j for n-1 >= j >= i >= 1
    - D: a{j,i} for n >= j >= i >= 2 (i may be 2'), and
         b{j,i} = j ... 3 2 2' 3 ... (i-1) i i (i-1) ... 3 2' 2 3 ... j for n >= j >= i >= 3
    Returns a list of (name, word).
    """
    gens = []
    if rs.family == "A":
        for j in range(1, rs.n):
            for i in range(j, 0, -1):
                gens.append((f"a{{{j},{i}}}", _reflect(_chain_down(j, i), [str(i), str(i)])))
        return gens

    gens.append(("a{2,2}", plain_word(["2", "2"])))
    gens.append(("a{2',2'}", plain_word([FORK, FORK])))
    for j in range(3, rs.n + 1):
        for i in range(j, 2, -1):
            gens.append((f"a{{{j},{i}}}", _reflect(_chain_down(j, i), [str(i), str(i)])))
        down = _chain_down(j, 2)
        gens.append((f"a{{{j},2}}", _reflect(down, ["2", "2"])))
        gens.append((f"a{{{j},2'}}", _reflect(down, [FORK, FORK])))
        for i in range(3, j + 1):
            path = _chain_down(j, 2) + ["2", FORK] + [str(k) for k in range(3, i)]
            gens.append((f"b{{{j},{i}}}", _reflect(path, [str(i), str(i)])))
    return gens


# =========================
# GARSIDE NORMAL FORM
# =========================

@lru_cache(maxsize=None)
def _tau(rs, w):
    w0 = longest_element(rs)
    return weyl_mul(weyl_mul(w0, w), w0)


@lru_cache(maxsize=65536)
def _renorm(rs, x, y):
    """Make the pair (x, y) left-weighted without changing the product x.y."""
    while True:
        moves = left_descents(rs, y) - right_descents(rs, x)
        if not moves:
            return x, y
        t = min(moves, key=lambda label: label_order(rs, label))
        s = simple_reflection(rs, t)
        x, y = weyl_mul(x, s), weyl_mul(s, y)


def _normalise(rs, power, factors):
    factors = list(factors)
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            pair = _renorm(rs, factors[i], factors[i + 1])
            if pair != (factors[i], factors[i + 1]):
                factors[i], factors[i + 1] = pair
                changed = True

    w0, e = longest_element(rs), weyl_identity(rs)
    while factors and factors[0] == w0:
        factors.pop(0)
        power += 1
    while factors and factors[-1] == e:
        factors.pop()
    return GarsideNF(power, tuple(factors))


def garside_nf(rs, word):
    """
    Left-greedy normal form Delta^k s_1 ... s_r of a braid word.
    - a positive letter appends its simple reflection
    - an inverse letter y^-1 = Delta^-1 (Delta y^-1): Delta^-1 moves to the
      front, twisting every factor by tau(s) = w0 s w0
    """
    check_word(rs, word)
    power, factors = 0, []
    w0 = longest_element(rs)
    for letter in word:
        s = simple_reflection(rs, letter.label)
        if letter.exp > 0:
            factors.append(s)
        else:
            factors = [_tau(rs, f) for f in factors]
            power -= 1
            factors.append(weyl_mul(w0, s))
        nf = _normalise(rs, power, factors)
        power, factors = nf.power, list(nf.factors)
    return GarsideNF(power, tuple(factors))


def nf_word(rs, nf):
    """A braid word spelling out a normal form."""
    delta = delta_word(rs)
    word = []
    if nf.power >= 0:
        word.extend(list(delta) * nf.power)
    else:
        word.extend(list(braid_inverse(delta)) * -nf.power)
    for factor in nf.factors:
        word.extend(braid_word_from_weyl(rs, factor))
    return tuple(word)


def braid_equal(rs, u, v):
    return garside_nf(rs, u) == garside_nf(rs, v)


# =========================
# BRUTE FORCE ORACLE
# =========================

def positive_class(rs, word, limit=100000):
    """
    Every positive word reachable from a positive `word` by braid relations.
    For positive words this is exactly its equality class in Br(rs).
    """
    labels = tuple(letter.label for letter in word)
    seen = {labels}
    queue = deque([labels])
    while queue and len(seen) < limit:
        current = queue.popleft()
        for i in range(len(current) - 1):
            a, b = current[i], current[i + 1]
            if a == b:
                continue
            m = coxeter_m(rs, a, b)
            if m == 2:
                candidate = current[:i] + (b, a) + current[i + 2:]
            elif i + 2 < len(current) and current[i + 2] == a:
                candidate = current[:i] + (b, a, b) + current[i + 3:]
            else:
                continue
            if candidate not in seen:
                seen.add(candidate)
                queue.append(candidate)
    return frozenset(seen)
