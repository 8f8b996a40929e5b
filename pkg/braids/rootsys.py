"""
Root systems A_{n-1} and D_n with their Weyl groups.

Conventions:
- roots are integer tuples over the basis e1..en
- A_{n-1}: simple roots a_i = e_i - e_{i+1}, labels "1".."n-1"
- D_n:     a_2 = -e1+e2, a_2' = e1+e2, a_k = -e_{k-1}+e_k, labels in the
           order 2 < 2' < 3 < ... < n
- a WeylElem is a signed permutation: e_i -> signs[i] * e_{perm[i]}
- weyl_mul(u, v) is the composition u o v (v is applied first)
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidSystem, NotARoot, ParabraidError

logger = logging.getLogger(__name__)

FORK = "2'"


@dataclass(frozen=True)
class RootSystem:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in ("A", "D"):
            raise InvalidSystem(f"unsupported family {self.family!r}")
        if self.family == "A" and self.n < 2:
            raise InvalidSystem("type A needs at least 2 strands")
        if self.family == "D" and self.n < 3:
            raise InvalidSystem("type D needs n >= 3")

    @property
    def rank(self):
        return self.n - 1 if self.family == "A" else self.n

    def __str__(self):
        return f"{self.family}_{self.rank if self.family == 'A' else self.n}"


def system_from_rank(family, rank):
    """A_{rank} has rank + 1 strands, D_{rank} has n = rank."""
    family = family.upper()
    return RootSystem(family, rank + 1 if family == "A" else rank)


@dataclass(frozen=True)
class WeylElem:
    perm: tuple
    signs: tuple

    def __str__(self):
        images = []
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            images.append(f"{i + 1}->{'-' if s < 0 else ''}{p + 1}")
        return "[" + " ".join(images) + "]"


# =========================
# SIMPLE ROOTS AND LABELS
# =========================

@lru_cache(maxsize=None)
def simple_labels(rs):
    if rs.family == "A":
        return tuple(str(i) for i in range(1, rs.n))
    return ("2", FORK) + tuple(str(k) for k in range(3, rs.n + 1))


def label_order(rs, label):
    try:
        return simple_labels(rs).index(label)
    except ValueError:
        raise ParabraidError(f"{label!r} is not a simple index of {rs}") from None


def _unit(n, i, sign=1):
    vec = [0] * n
    vec[i] = sign
    return vec


@lru_cache(maxsize=None)
def simple_root(rs, label):
    label_order(rs, label)
    n = rs.n
    vec = [0] * n
    if rs.family == "A":
        i = int(label) - 1
        vec[i], vec[i + 1] = 1, -1
    elif label == FORK:
        vec[0], vec[1] = 1, 1
    else:
        k = int(label) - 1
        vec[k - 1], vec[k] = -1, 1
    return tuple(vec)


def simple_roots(rs):
    return [simple_root(rs, label) for label in simple_labels(rs)]


def label_of(rs, root):
    """Simple index whose root is `root`, or None."""
    for label in simple_labels(rs):
        if simple_root(rs, label) == root:
            return label
    return None


def dot(r, s):
    return sum(x * y for x, y in zip(r, s))


def coxeter_m(rs, alpha, beta):
    if alpha == beta:
        return 1
    product = dot(simple_root(rs, alpha), simple_root(rs, beta))
    return 3 if product == -1 else 2


def oriented_pairs(rs, m):
    """Pairs (a, b) of simple indices with a < b in the simple order and coxeter_m == m."""
    labels = simple_labels(rs)
    return [
        (a, b)
        for i, a in enumerate(labels)
        for b in labels[i + 1:]
        if coxeter_m(rs, a, b) == m
    ]


# =========================
# ROOTS
# =========================

@lru_cache(maxsize=None)
def all_roots(rs):
    n = rs.n
    roots = set()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            vec = [0] * n
            vec[i], vec[j] = 1, -1
            roots.add(tuple(vec))
            if rs.family == "D" and i < j:
                for sign in (1, -1):
                    vec = [0] * n
                    vec[i] = vec[j] = sign
                    roots.add(tuple(vec))
    return frozenset(roots)


def is_root(rs, r):
    return tuple(r) in all_roots(rs)


def require_root(rs, r):
    if not is_root(rs, r):
        raise NotARoot(f"{root_to_text(r)} is not a root of {rs}")
    return tuple(r)


def is_positive(rs, r):
    """A: first nonzero coordinate is +1. D: last nonzero coordinate is +1."""
    coords = [c for c in r if c]
    if not coords:
        return False
    return (coords[0] if rs.family == "A" else coords[-1]) > 0


@lru_cache(maxsize=None)
def positive_roots(rs):
    return tuple(sorted(r for r in all_roots(rs) if is_positive(rs, r)))


def sorted_roots(rs):
    """All roots, positive ones first, each half in lexicographic order."""
    return positive_roots(rs) + tuple(sorted(tuple(-c for c in r) for r in positive_roots(rs)))


def root_to_text(r):
    parts = []
    for i, c in enumerate(r):
        if c:
            sign = "+" if c > 0 else "-"
            parts.append(f"{sign}e{i + 1}" if abs(c) == 1 else f"{sign}{abs(c)}*e{i + 1}")
    text = "".join(parts) or "0"
    return text[1:] if text.startswith("+") else text


def root_from_text(rs, text):
    vec = [0] * rs.n
    token = text.replace(" ", "")
    if not token:
        raise NotARoot("empty root")
    if token[0] not in "+-":
        token = "+" + token
    pos = 0
    while pos < len(token):
        sign = 1 if token[pos] == "+" else -1
        pos += 1
        if pos >= len(token) or token[pos] != "e":
            raise NotARoot(f"cannot read root {text!r}")
        pos += 1
        start = pos
        while pos < len(token) and token[pos].isdigit():
            pos += 1
        if start == pos:
            raise NotARoot(f"cannot read root {text!r}")
        index = int(token[start:pos]) - 1
        if not 0 <= index < rs.n:
            raise NotARoot(f"cannot read root {text!r}")
        vec[index] += sign
        if pos < len(token) and token[pos] not in "+-":
            raise NotARoot(f"cannot read root {text!r}")
    return require_root(rs, vec)


# =========================
# WEYL GROUP
# =========================

def weyl_identity(rs):
    return WeylElem(tuple(range(rs.n)), (1,) * rs.n)


def reflection(rs, alpha):
    """The reflection r -> r - (r, alpha) alpha as a signed permutation."""
    n = rs.n
    perm, signs = [], []
    for i in range(n):
        image = _unit(n, i)
        c = alpha[i]
        image = [x - c * a for x, a in zip(image, alpha)]
        j = next(k for k, x in enumerate(image) if x)
        perm.append(j)
        signs.append(image[j])
    return WeylElem(tuple(perm), tuple(signs))


@lru_cache(maxsize=None)
def simple_reflection(rs, label):
    return reflection(rs, simple_root(rs, label))


def weyl_act(w, r):
    out = [0] * len(r)
    for i, c in enumerate(r):
        if c:
            out[w.perm[i]] += c * w.signs[i]
    return tuple(out)


def weyl_mul(u, v):
    perm = tuple(u.perm[v.perm[i]] for i in range(len(v.perm)))
    signs = tuple(v.signs[i] * u.signs[v.perm[i]] for i in range(len(v.perm)))
    return WeylElem(perm, signs)


def weyl_inverse(w):
    perm = [0] * len(w.perm)
    signs = [1] * len(w.perm)
    for i, (p, s) in enumerate(zip(w.perm, w.signs)):
        perm[p] = i
        signs[p] = s
    return WeylElem(tuple(perm), tuple(signs))


def weyl_product(rs, labels):
    """sigma_{l1} o ... o sigma_{lr}."""
    w = weyl_identity(rs)
    for label in labels:
        w = weyl_mul(w, simple_reflection(rs, label))
    return w


def weyl_length(rs, w):
    return sum(1 for r in positive_roots(rs) if not is_positive(rs, weyl_act(w, r)))


def right_descents(rs, w):
    """Labels t with l(w s_t) < l(w)."""
    return frozenset(t for t in simple_labels(rs) if not is_positive(rs, weyl_act(w, simple_root(rs, t))))


def left_descents(rs, w):
    """Labels t with l(s_t w) < l(w)."""
    return right_descents(rs, weyl_inverse(w))


@lru_cache(maxsize=None)
def longest_element(rs):
    w = weyl_identity(rs)
    grew = True
    while grew:
        grew = False
        for t in simple_labels(rs):
            if is_positive(rs, weyl_act(w, simple_root(rs, t))):
                w = weyl_mul(w, simple_reflection(rs, t))
                grew = True
    return w


@lru_cache(maxsize=None)
def weyl_elements(rs):
    """Every element of W, in breadth-first order from the identity."""
    start = weyl_identity(rs)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for t in simple_labels(rs):
            nxt = weyl_mul(w, simple_reflection(rs, t))
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return tuple(order)


def reduced_word(rs, w):
    """Lexicographically smallest reduced word (l1, ..., lk) with w = s_{l1} o ... o s_{lk}."""
    word = []
    while True:
        descents = left_descents(rs, w)
        if not descents:
            return tuple(word)
        t = min(descents, key=lambda label: label_order(rs, label))
        word.append(t)
        w = weyl_mul(simple_reflection(rs, t), w)


def reduced_words(rs, w, limit=16):
    """Up to `limit` reduced words of w, in lexicographic order of labels."""
    out = []

    def walk(current, prefix):
        if len(out) >= limit:
            return
        descents = sorted(left_descents(rs, current), key=lambda label: label_order(rs, label))
        if not descents:
            out.append(tuple(prefix))
            return
        for t in descents:
            walk(weyl_mul(simple_reflection(rs, t), current), prefix + [t])

    walk(w, [])
    return out


def _root_distances(rs, start):
    dist = {start: 0}
    queue = deque([start])
    while queue:
        r = queue.popleft()
        for t in simple_labels(rs):
            s = weyl_act(simple_reflection(rs, t), r)
            if s not in dist:
                dist[s] = dist[r] + 1
                queue.append(s)
    return dist


@lru_cache(maxsize=None)
def weyl_to_simple_word(rs, alpha):
    """
    Shortest word (l1, ..., lk) with s_{l1} o ... o s_{lk} (alpha) simple.
    Ties: smallest target index first, then the lexicographically smallest word.
    Returns (word, target label).
    """
    alpha = require_root(rs, alpha)
    dist = _root_distances(rs, alpha)
    targets = [t for t in simple_labels(rs) if simple_root(rs, t) in dist]
    length = min(dist[simple_root(rs, t)] for t in targets)
    target = next(t for t in targets if dist[simple_root(rs, t)] == length)

    # walk back from the target: l1 is applied last
    word = []
    current = simple_root(rs, target)
    for remaining in range(length - 1, -1, -1):
        for t in simple_labels(rs):
            candidate = weyl_act(simple_reflection(rs, t), current)
            if dist.get(candidate) == remaining:
                word.append(t)
                current = candidate
                break
    return tuple(word), target


def weyl_to_simple(rs, alpha):
    word, target = weyl_to_simple_word(rs, alpha)
    return weyl_product(rs, word), target


def weyl_to_simple_choices(rs, alpha, limit=16):
    """
    Every minimal-length (w, target) with w(alpha) simple, each with its
    reduced words (capped). Yields (word, target) pairs.
    """
    alpha = require_root(rs, alpha)
    best = None
    found = []
    for w in weyl_elements(rs):
        image = weyl_act(w, alpha)
        target = label_of(rs, image)
        if target is None:
            continue
        length = weyl_length(rs, w)
        if best is None or length < best:
            best, found = length, [(w, target)]
        elif length == best:
            found.append((w, target))
    choices = []
    for w, target in found:
        for word in reduced_words(rs, w, limit=limit):
            choices.append((word, target))
    return choices
