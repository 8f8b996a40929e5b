"""
Steinberg groups St(Phi, A) through their matrix model, the Weyl action on
generators and the semidirect product St(Phi, A) x| Br(Phi).

Matrix model:
- A_{n-1}: x_{e_i-e_j}(a) = I + a E_ij (n x n)
- D_n:     2n x 2n, coordinates 1..n carry +e_i, n+1..2n carry -e_i;
           every root vector has the shape E_uv - E_{v'u'} where ' swaps halves
The D vectors of some simple roots are negated so that every (A2)-oriented
simple pair has structure constant +1. The flips come from `calibrate` and
are committed in steinberg_signs.py.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .braid import braid_equal, weyl_image
from .errors import InvalidSystem, ParabraidError
from .ring import (
    coerce,
    is_zero,
    matrix_ring,
    ring_add,
    ring_from_int,
    ring_mul,
    ring_neg,
    ring_one,
    ring_zero,
    scale,
    symbol,
    to_text,
)
from .rootsys import (
    is_root,
    oriented_pairs,
    require_root,
    root_from_text,
    root_to_text,
    simple_labels,
    simple_reflection,
    simple_root,
    sorted_roots,
    weyl_act,
)

logger = logging.getLogger(__name__)


class StLetter(NamedTuple):
    root: tuple
    param: object


@dataclass(frozen=True)
class SignTable:
    rs: object
    flips: frozenset

    def sign(self, root):
        return -1 if tuple(root) in self.flips else 1

    def flip_texts(self):
        return tuple(sorted(root_to_text(r) for r in self.flips))


@dataclass(frozen=True)
class SemidirectElem:
    st: tuple
    br: tuple


def dimension(rs):
    return rs.n if rs.family == "A" else 2 * rs.n


def format_steinberg(word):
    if not word:
        return "1"
    return " ".join(f"x{{{root_to_text(l.root)}}}[{to_text(l.param)}]" for l in word)


# =========================
# INTEGER ROOT VECTORS
# =========================

@lru_cache(maxsize=None)
def _raw_vector(rs, root):
    n, d = rs.n, dimension(rs)
    X = np.zeros((d, d), dtype=np.int64)
    plus = [i for i, c in enumerate(root) if c > 0]
    minus = [i for i, c in enumerate(root) if c < 0]
    if rs.family == "A":
        X[plus[0], minus[0]] = 1
    elif plus and minus:
        i, j = plus[0], minus[0]
        X[i, j] = 1
        X[n + j, n + i] = -1
    elif plus:
        i, j = plus
        X[i, n + j] = 1
        X[j, n + i] = -1
    else:
        i, j = minus
        X[n + j, i] = 1
        X[n + i, j] = -1
    X.setflags(write=False)
    return X


def root_vector(rs, root, table=None):
    """Integer matrix X_root of the model (signs from `table`)."""
    root = require_root(rs, root)
    table = table or committed_table(rs)
    return table.sign(root) * _raw_vector(rs, root)


@lru_cache(maxsize=None)
def weyl_matrix(rs, w):
    """
    Natural permutation lift P_w with P_w e_k = e_{pi(k)}.
    D permutes the 2n weights +-e_i, so P_w preserves the split form.
    """
    n, d = rs.n, dimension(rs)
    P = np.zeros((d, d), dtype=np.int64)
    for k in range(n):
        p, s = w.perm[k], w.signs[k]
        if rs.family == "A":
            P[p, k] = 1
        else:
            P[p if s > 0 else n + p, k] = 1
            P[n + p if s > 0 else p, n + k] = 1
    P.setflags(write=False)
    return P


def split_form(rs):
    n = rs.n
    J = np.zeros((2 * n, 2 * n), dtype=np.int64)
    J[:n, n:] = np.eye(n, dtype=np.int64)
    J[n:, :n] = np.eye(n, dtype=np.int64)
    return J


def _ratio(C, Z, what):
    index = tuple(np.argwhere(Z != 0)[0])
    factor = int(C[index] // Z[index])
    if not np.array_equal(C, factor * Z):
        raise ParabraidError(f"{what} is not a multiple of the expected root vector")
    return factor


def structure_constant(rs, alpha, beta, table=None):
    """N with [X_alpha, X_beta] = N X_{alpha+beta}."""
    total = tuple(a + b for a, b in zip(alpha, beta))
    if not is_root(rs, total):
        raise ParabraidError(f"{root_to_text(alpha)} + {root_to_text(beta)} is not a root")
    X, Y = root_vector(rs, alpha, table), root_vector(rs, beta, table)
    return _ratio(X @ Y - Y @ X, root_vector(rs, total, table), "commutator")


@lru_cache(maxsize=None)
def conjugation_sign(rs, w, root, table=None):
    """eta with P_w X_root P_w^-1 = eta X_{w(root)}."""
    P = weyl_matrix(rs, w)
    conjugated = P @ root_vector(rs, root, table) @ P.T
    return _ratio(conjugated, root_vector(rs, weyl_act(w, root), table), "conjugate")


# =========================
# SIGN CALIBRATION
# =========================

def calibrate(rs, start=None):
    """
    Walk the (A2)-oriented simple pairs in order and negate the vector of
    the larger root whenever the pair has structure constant -1.
    """
    flips = set(start.flips) if start else set()
    for a, b in oriented_pairs(rs, 3):
        table = SignTable(rs, frozenset(flips))
        alpha, beta = simple_root(rs, a), simple_root(rs, b)
        if structure_constant(rs, alpha, beta, table) == -1:
            flips ^= {beta}
            logger.info("%s: negating root vector of %s", rs, root_to_text(beta))
    return SignTable(rs, frozenset(flips))


@lru_cache(maxsize=None)
def committed_table(rs):
    from .steinberg_signs import ROOT_SIGN_FLIPS

    key = f"{rs.family}{rs.n}"
    if key in ROOT_SIGN_FLIPS:
        flips = frozenset(root_from_text(rs, text) for text in ROOT_SIGN_FLIPS[key])
        return SignTable(rs, flips)
    if rs.family == "A":
        return SignTable(rs, frozenset())
    logger.info("%s has no committed sign table, calibrating", rs)
    return calibrate(rs)


def n_table(rs, table=None):
    """Structure constants for every ordered pair of roots whose sum is a root."""
    out = {}
    roots = sorted_roots(rs)
    for alpha in roots:
        for beta in roots:
            total = tuple(a + b for a, b in zip(alpha, beta))
            if is_root(rs, total):
                out[(alpha, beta)] = structure_constant(rs, alpha, beta, table)
    return out


def eta_table(rs, table=None):
    """Conjugation signs of the simple reflections on every root."""
    return {
        (label, root): conjugation_sign(rs, simple_reflection(rs, label), root, table)
        for label in simple_labels(rs)
        for root in sorted_roots(rs)
    }


def is_sign_free(rs, table=None):
    return all(eta == 1 for eta in eta_table(rs, table).values())


def render_sign_module(tables):
    lines = [
        '"""',
        "Root-vector sign flips of the D_n matrix model.",
        "",
        "Generated by `python manage.py calibrate --write`; do not edit by hand.",
        '"""',
        "",
        "ROOT_SIGN_FLIPS = {",
    ]
    for table in tables:
        key = f"{table.rs.family}{table.rs.n}"
        texts = table.flip_texts()
        roots = ", ".join(repr(text) for text in texts) + ("," if len(texts) == 1 else "")
        lines.append(f"    {key!r}: ({roots}),")
    lines.append("}")
    return "\n".join(lines) + "\n"


# =========================
# RING MATRICES
# =========================

def identity_matrix(desc, d):
    zero, one = ring_zero(desc), ring_one(desc)
    M = np.empty((d, d), dtype=object)
    for i in range(d):
        for j in range(d):
            M[i, j] = one if i == j else zero
    return M


def lift_matrix(desc, X):
    """Integer matrix as a matrix over `desc`."""
    M = np.empty(X.shape, dtype=object)
    zero = ring_zero(desc)
    for (i, j), value in np.ndenumerate(X):
        M[i, j] = ring_from_int(desc, int(value)) if value else zero
    return M


def mat_mul(A, B):
    return np.dot(A, B)


def matrices_equal(A, B):
    return A.shape == B.shape and all(x == y for x, y in zip(A.flat, B.flat))


def format_matrix(M):
    rows = [[to_text(x) for x in row] for row in M]
    width = max((len(cell) for row in rows for cell in row), default=1)
    return "\n".join("[ " + "  ".join(cell.rjust(width) for cell in row) + " ]" for row in rows)


def _require_family_ring(rs, desc):
    if rs.family == "D" and not desc.is_commutative:
        raise InvalidSystem("type D needs a commutative ring")


def st_matrix(rs, root, param, table=None):
    """x_root(param) = I + param * X_root."""
    root = require_root(rs, root)
    _require_family_ring(rs, param.descriptor)
    desc = matrix_ring(param.descriptor)
    a = coerce(param, desc)
    X = root_vector(rs, root, table)
    M = identity_matrix(desc, dimension(rs))
    for i, j in np.argwhere(X != 0):
        M[i, j] = scale(a, int(X[i, j]))
    return M


def perm_matrix(rs, w, desc):
    return lift_matrix(matrix_ring(desc), weyl_matrix(rs, w))


def st_eval(rs, ring, word, table=None):
    """Ordered product of generator matrices, first letter leftmost."""
    _require_family_ring(rs, ring)
    M = identity_matrix(matrix_ring(ring), dimension(rs))
    for letter in word:
        M = mat_mul(M, st_matrix(rs, letter.root, coerce(letter.param, ring), table))
    return M


def fold(word):
    """(St0) normalization: merge adjacent letters on one root, drop zero parameters."""
    out = []
    for letter in word:
        if is_zero(letter.param):
            continue
        if out and out[-1].root == letter.root:
            merged = ring_add(out[-1].param, letter.param)
            out.pop()
            if not is_zero(merged):
                out.append(StLetter(letter.root, merged))
        else:
            out.append(letter)
    return tuple(out)


# =========================
# WEYL ACTION AND SEMIDIRECT PRODUCT
# =========================

def weyl_act_st(rs, w, word, signed=False, table=None):
    """
    Letterwise action (root, a) -> (w(root), a).
    With signed=True the parameter picks up the conjugation sign of the
    permutation lift, which is the action realized by the D matrix model.
    """
    out = []
    for letter in word:
        param = letter.param
        if signed and conjugation_sign(rs, w, letter.root, table) < 0:
            param = ring_neg(param)
        out.append(StLetter(weyl_act(w, letter.root), param))
    return tuple(out)


def sd_identity():
    return SemidirectElem((), ())


def sd_mul(rs, p, q, signed=False, table=None):
    """(s1, b1)(s2, b2) = (s1 . (b1bar . s2), b1 b2)."""
    twisted = weyl_act_st(rs, weyl_image(rs, p.br), q.st, signed=signed, table=table)
    return SemidirectElem(p.st + twisted, p.br + q.br)


def sd_equal(rs, ring, p, q, table=None):
    if not braid_equal(rs, p.br, q.br):
        return False
    return matrices_equal(st_eval(rs, ring, p.st, table), st_eval(rs, ring, q.st, table))


# =========================
# STEINBERG RELATIONS
# =========================

def commutator_parameter(rs, alpha, beta, a, b, table=None):
    """
    c with x_alpha(a) x_beta(b) = x_beta(b) x_{alpha+beta}(c) x_alpha(a).
    Over a commutative ring c = N a b. Type A keeps the factor order:
    c = a b when X_alpha X_beta != 0, otherwise c = -(b a).
    """
    N = structure_constant(rs, alpha, beta, table)
    if a.descriptor.is_commutative:
        return scale(ring_mul(a, b), N)
    X, Y = root_vector(rs, alpha, table), root_vector(rs, beta, table)
    if np.any(X @ Y):
        return ring_mul(a, b)
    return ring_neg(ring_mul(b, a))


def st_relation_instances(rs, ring, table=None):
    """
    Every (St0), (St1), (St2) instance with symbols a, b of `ring`.
    Returns (name, lhs, rhs) triples of Steinberg words.
    """
    a, b = symbol(ring, "a"), symbol(ring, "b")
    roots = sorted_roots(rs)
    out = []
    for alpha in roots:
        name = root_to_text(alpha)
        out.append((
            f"St0[{name}]",
            (StLetter(alpha, a), StLetter(alpha, b)),
            (StLetter(alpha, ring_add(a, b)),),
        ))
    for alpha in roots:
        for beta in roots:
            if beta == alpha or beta == tuple(-c for c in alpha):
                continue
            total = tuple(x + y for x, y in zip(alpha, beta))
            pair = f"{root_to_text(alpha)},{root_to_text(beta)}"
            lhs = (StLetter(alpha, a), StLetter(beta, b))
            if is_root(rs, total):
                c = commutator_parameter(rs, alpha, beta, a, b, table)
                rhs = (StLetter(beta, b), StLetter(total, c), StLetter(alpha, a))
                out.append((f"St2[{pair}]", lhs, rhs))
            else:
                out.append((f"St1[{pair}]", lhs, (StLetter(beta, b), StLetter(alpha, a))))
    return out


def preserves_split_form(rs, M):
    """M^T J M == J for the split form J (type D)."""
    J = lift_matrix(M[0, 0].descriptor, split_form(rs))
    return matrices_equal(mat_mul(mat_mul(M.T, J), M), J)
