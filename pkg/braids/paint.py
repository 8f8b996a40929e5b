"""
Painted braids: a parametrized word acting on a vector of strand colours.

A crossing y_k^a swaps strands k and k+1 and spills a times the colour of
strand k onto the other strand, i.e. (u, v) -> (v + a u, u). As a matrix
this is x_{alpha_k}(a) . P_k. A word l1 ... lr acts through
M(l1) M(l2) ... M(lr) on column colour vectors.

Type D uses the same factorization in the 2n-dimensional Steinberg model.
"""
import logging
from dataclasses import dataclass

from .braid import weyl_image
from .errors import InvalidSystem, ParabraidError
from .pbg import ParamLetter, format_word, phi, pi, psi_simple
from .ring import (
    INTEGERS,
    MODULAR,
    POLY,
    coerce,
    matrix_ring,
    poly,
    ring_neg,
    ring_zero,
    symbol,
    with_symbols,
)
from .rootsys import oriented_pairs, simple_labels, simple_reflection, simple_root
from .steinberg import (
    dimension,
    identity_matrix,
    mat_mul,
    matrices_equal,
    perm_matrix,
    st_eval,
    st_matrix,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PaintAction:
    matrix: object
    perm: object

    def __eq__(self, other):
        if not isinstance(other, PaintAction):
            return NotImplemented
        return self.perm == other.perm and matrices_equal(self.matrix, other.matrix)


def paint_letter(rs, label, a, exp=1, table=None):
    """
    Matrix of one crossing.
    - y_k^a        -> x_k(a) . P_k
    - (y_k^a)^-1   -> P_k^-1 . x_k(-a)
    """
    sigma = simple_reflection(rs, label)
    X = st_matrix(rs, simple_root(rs, label), a if exp > 0 else ring_neg(a), table)
    P = perm_matrix(rs, sigma, a.descriptor)
    return PaintAction(mat_mul(X, P) if exp > 0 else mat_mul(P.T, X), sigma)


def paint_word(rs, ring, word, table=None):
    if rs.family == "D" and not ring.is_commutative:
        raise InvalidSystem("type D needs a commutative ring")
    M = identity_matrix(matrix_ring(ring), dimension(rs))
    for letter in word:
        step = paint_letter(rs, letter.label, coerce(letter.param, ring), letter.exp, table)
        M = mat_mul(M, step.matrix)
    return PaintAction(M, weyl_image(rs, pi(word)))


def paint_vs_phi(rs, ring, word, signed=False, table=None):
    """
    Does the painted action factor as st_eval(phi(word).st) . P(weyl image)?
    The literal Weyl action matches type A everywhere and type D in
    characteristic 2; signed=True matches every ring.
    """
    action = paint_word(rs, ring, word, table)
    image = phi(rs, ring, word, signed=signed, table=table)
    perm = weyl_image(rs, image.br)
    expected = mat_mul(st_eval(rs, ring, image.st, table), perm_matrix(rs, perm, ring))
    return action.perm == perm and matrices_equal(action.matrix, expected)


# =========================
# COLOURS
# =========================

def colour_ring(ring, names):
    """Parameter ring extended by one symbol per colour name."""
    if ring.kind == POLY:
        return with_symbols(ring, names)
    if ring.kind == INTEGERS:
        return poly(names, commutative=True)
    raise ParabraidError(f"colours need a polynomial or integer ring, got {ring}")


def apply_colors(rs, ring, word, names, table=None):
    """Final colour of every strand after `word`, starting from symbolic colours `names`."""
    if len(names) != dimension(rs):
        raise ParabraidError(f"{rs} needs {dimension(rs)} colours, got {len(names)}")
    target = colour_ring(ring, names)
    lifted = tuple(ParamLetter(l.label, coerce(l.param, target), l.exp) for l in word)
    action = paint_word(rs, target, lifted, table)
    colours = [symbol(target, name) for name in names]
    out = []
    for row in action.matrix:
        total = ring_zero(target)
        for entry, colour in zip(row, colours):
            total = total + entry * colour
        out.append(total)
    return out


# =========================
# DIAGRAMS
# =========================

def draw_word(rs, word):
    """
    ASCII picture, first letter on top.
    Type A: one column per strand and an X between the crossing strands.
    Type D: one letter per line.
    """
    if rs.family == "D":
        return "\n".join(format_word((letter,)) for letter in word) or "1"
    n = rs.n
    width = 2 * n - 1
    strands = "|" + " |" * (n - 1)
    lines = [" ".join(str(j) for j in range(1, n + 1))]
    for index, letter in enumerate(word):
        if index:
            lines.append(strands)
        k = int(letter.label)
        row = [" "] * width
        for j in range(1, n + 1):
            if j not in (k, k + 1):
                row[2 * (j - 1)] = "|"
        row[2 * k - 1] = "X"
        lines.append("".join(row) + "   " + format_word((letter,)))
    return "\n".join(lines)


# =========================
# RELATIONS IN THE MODEL
# =========================

def symbolic(ring, names):
    """Polynomial version of `ring` containing the symbols `names`."""
    if ring.kind == POLY:
        return with_symbols(ring, names)
    return poly(names, modulus=ring.modulus if ring.kind == MODULAR else None)


def kassel_reutenauer_relations(rs, ring):
    """
    The presentation of St_n(A) x| S_n through parametrized crossings:
    - (y_i^0)^2 = 1
    - y_i^a (y_i^0)^-1 y_i^b = y_i^(a+b)
    - y_i^a y_j^b = y_j^b y_i^a for |i - j| >= 2
    - (A2)
    Returns (name, lhs, rhs) triples.
    """
    if rs.family != "A":
        raise InvalidSystem("the Kassel-Reutenauer relations are stated for type A")
    ring = symbolic(ring, ("a", "b", "c"))
    a, b, c = (symbol(ring, name) for name in ("a", "b", "c"))
    zero = ring_zero(ring)
    out = []
    for i in simple_labels(rs):
        out.append((f"involution[{i}]", (ParamLetter(i, zero), ParamLetter(i, zero)), ()))
        out.append((
            f"additive[{i}]",
            (ParamLetter(i, a), ParamLetter(i, zero, -1), ParamLetter(i, b)),
            (ParamLetter(i, a + b),),
        ))
    for i, j in oriented_pairs(rs, 2):
        out.append((
            f"commute[{i},{j}]",
            (ParamLetter(i, a), ParamLetter(j, b)),
            (ParamLetter(j, b), ParamLetter(i, a)),
        ))
    for i, j in oriented_pairs(rs, 3):
        out.append((
            f"A2[{i},{j}]",
            (ParamLetter(i, a), ParamLetter(j, b), ParamLetter(i, c)),
            (ParamLetter(j, c), ParamLetter(i, b + a * c), ParamLetter(j, a)),
        ))
    return out


def pure_braid_shadow(rs, ring, label, omega, table=None):
    """paint(psi_k . omega) == paint(omega . psi_k) with symbolic a."""
    ring = symbolic(ring, ("a",))
    zero = ring_zero(ring)
    spill = psi_simple(rs, label, symbol(ring, "a"))
    word = tuple(ParamLetter(l.label, zero, l.exp) for l in omega)
    return paint_word(rs, ring, spill + word, table) == paint_word(rs, ring, word + spill, table)
