"""
Parameter rings A for the braid engine.

Four kinds of ring are supported:
- int:   the integers, arbitrary precision
- mod:   Z/mZ
- poly:  polynomials over Z (or Z/mZ) in named symbols, commutative or not
- ideal: the non-unital ring gZ/mZ, whose matrices live in Z/mZ

Every value is an immutable RingElem holding a canonical payload, so two
elements are equal exactly when their payloads are identical.
"""
import logging
import re
from dataclasses import dataclass

import sympy

from .errors import NonUnitalRing, ParabraidError, RingMismatch

logger = logging.getLogger(__name__)

SYMBOL_RE = re.compile(r"^[a-z][a-z0-9_]*$")

INTEGERS = "int"
MODULAR = "mod"
POLY = "poly"
IDEAL = "ideal"


# =========================
# DESCRIPTORS
# =========================

@dataclass(frozen=True)
class RingDescriptor:
    kind: str
    modulus: int | None = None
    symbols: tuple = ()
    commutative: bool = True
    generator: int | None = None

    def __post_init__(self):
        if self.kind == MODULAR:
            if self.modulus is None or self.modulus < 2:
                raise ParabraidError("Modular ring needs m >= 2")
        elif self.kind == POLY:
            if len(set(self.symbols)) != len(self.symbols):
                raise ParabraidError("Poly symbols must be distinct")
            for name in self.symbols:
                if not SYMBOL_RE.match(name):
                    raise ParabraidError(f"bad symbol name {name!r}")
            if self.modulus is not None and self.modulus < 2:
                raise ParabraidError("coefficient modulus must be >= 2")
        elif self.kind == IDEAL:
            g, m = self.generator, self.modulus
            if g is None or m is None or not (1 < g < m) or m % g:
                raise ParabraidError("ideal ring needs 1 < g < m with g dividing m")
        elif self.kind != INTEGERS:
            raise ParabraidError(f"unknown ring kind {self.kind!r}")

    @property
    def is_commutative(self):
        return self.kind != POLY or self.commutative

    @property
    def unital(self):
        return self.kind != IDEAL

    @property
    def characteristic(self):
        if self.kind in (MODULAR, IDEAL):
            return self.modulus
        if self.kind == POLY and self.modulus is not None:
            return self.modulus
        return 0

    def __str__(self):
        if self.kind == MODULAR:
            return f"mod:{self.modulus}"
        if self.kind == IDEAL:
            return f"ideal:{self.generator},{self.modulus}"
        if self.kind == POLY:
            parts = list(self.symbols)
            if not self.commutative:
                parts.append("noncomm")
            if self.modulus is not None:
                parts.append(f"mod{self.modulus}")
            return "poly:" + ",".join(parts)
        return "int"


def integers():
    return RingDescriptor(INTEGERS)


def modular(m):
    return RingDescriptor(MODULAR, modulus=m)


def poly(symbols, commutative=True, modulus=None):
    return RingDescriptor(POLY, modulus=modulus, symbols=tuple(symbols), commutative=commutative)


def ideal(generator, modulus):
    return RingDescriptor(IDEAL, modulus=modulus, generator=generator)


def matrix_ring(desc):
    """Ring in which matrices with entries from `desc` are computed."""
    if desc.kind == IDEAL:
        return modular(desc.modulus)
    return desc


def with_symbols(desc, extra):
    """Poly descriptor extended by `extra` symbols (kept in order, no duplicates)."""
    if desc.kind != POLY:
        raise ParabraidError("only polynomial rings can be extended by symbols")
    symbols = list(desc.symbols)
    for name in extra:
        if name not in symbols:
            symbols.append(name)
    return poly(symbols, commutative=desc.commutative, modulus=desc.modulus)


# =========================
# ELEMENTS
# =========================

def canonicalize(desc, payload):
    """
    Canonical payload for `desc`.
    - int: the integer itself
    - mod / ideal: the residue in [0, m)
    - poly: tuple of (monomial, coefficient) pairs, zero coefficients dropped,
      monomials sorted when commutative, terms ordered by (degree, monomial)
    """
    if desc.kind == INTEGERS:
        return int(payload)
    if desc.kind in (MODULAR, IDEAL):
        return int(payload) % desc.modulus

    terms = {}
    items = payload.items() if isinstance(payload, dict) else payload
    for mono, coeff in items:
        mono = tuple(sorted(mono)) if desc.commutative else tuple(mono)
        terms[mono] = terms.get(mono, 0) + int(coeff)
    if desc.modulus is not None:
        terms = {mono: c % desc.modulus for mono, c in terms.items()}
    return tuple(sorted(
        ((mono, c) for mono, c in terms.items() if c),
        key=lambda term: (len(term[0]), term[0]),
    ))


@dataclass(frozen=True)
class RingElem:
    descriptor: RingDescriptor
    payload: object

    def __add__(self, other):
        return ring_add(self, _lift_int(self.descriptor, other))

    def __radd__(self, other):
        return ring_add(_lift_int(self.descriptor, other), self)

    def __sub__(self, other):
        return ring_sub(self, _lift_int(self.descriptor, other))

    def __rsub__(self, other):
        return ring_sub(_lift_int(self.descriptor, other), self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return ring_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return ring_mul(other, self)

    def __neg__(self):
        return ring_neg(self)

    def __bool__(self):
        return not is_zero(self)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"RingElem({to_text(self)!r})"


def _lift_int(desc, value):
    if isinstance(value, RingElem):
        return value
    if value == 0:
        return ring_zero(desc)
    return ring_from_int(desc, value)


def _check(x, y):
    if x.descriptor != y.descriptor:
        raise RingMismatch(x.descriptor, y.descriptor)
    return x.descriptor


def ring_zero(desc):
    return RingElem(desc, canonicalize(desc, () if desc.kind == POLY else 0))


def ring_one(desc):
    if not desc.unital:
        raise NonUnitalRing(f"{desc} has no multiplicative unit")
    return ring_from_int(desc, 1)


def ring_from_int(desc, value):
    if desc.kind == POLY:
        return RingElem(desc, canonicalize(desc, [((), value)]))
    if desc.kind == IDEAL and (value % desc.modulus) % desc.generator:
        raise ParabraidError(f"{value} is not an element of {desc}")
    return RingElem(desc, canonicalize(desc, value))


def symbol(desc, name):
    if desc.kind != POLY or name not in desc.symbols:
        raise ParabraidError(f"{name!r} is not a symbol of {desc}")
    return RingElem(desc, canonicalize(desc, [((desc.symbols.index(name),), 1)]))


def is_zero(x):
    return not x.payload if x.descriptor.kind == POLY else x.payload == 0


def ring_add(x, y):
    desc = _check(x, y)
    if desc.kind == POLY:
        return RingElem(desc, canonicalize(desc, list(x.payload) + list(y.payload)))
    return RingElem(desc, canonicalize(desc, x.payload + y.payload))


def ring_neg(x):
    desc = x.descriptor
    if desc.kind == POLY:
        return RingElem(desc, canonicalize(desc, [(m, -c) for m, c in x.payload]))
    return RingElem(desc, canonicalize(desc, -x.payload))


def ring_sub(x, y):
    return ring_add(x, ring_neg(y))


def ring_mul(x, y):
    desc = _check(x, y)
    if desc.kind != POLY:
        return RingElem(desc, canonicalize(desc, x.payload * y.payload))
    if not x.payload or not y.payload:
        return ring_zero(desc)
    terms = [(m1 + m2, c1 * c2) for m1, c1 in x.payload for m2, c2 in y.payload]
    return RingElem(desc, canonicalize(desc, terms))


def scale(x, k):
    """k·x for an integer k (valid in non-unital rings too)."""
    desc = x.descriptor
    if desc.kind == POLY:
        return RingElem(desc, canonicalize(desc, [(m, c * k) for m, c in x.payload]))
    return RingElem(desc, canonicalize(desc, x.payload * k))


def coerce(x, target):
    """
    Image of x in `target` under the obvious inclusion.
    Supported: identity, ideal -> its ambient Z/mZ, int -> any ring,
    poly -> poly over a superset of symbols with the same coefficients.
    """
    src = x.descriptor
    if src == target:
        return x
    if src.kind == IDEAL and target == matrix_ring(src):
        return RingElem(target, x.payload)
    if src.kind == INTEGERS:
        return _lift_int(target, x.payload)
    if src.kind == POLY and target.kind == POLY and target.modulus == src.modulus:
        if all(name in target.symbols for name in src.symbols):
            remap = [target.symbols.index(name) for name in src.symbols]
            terms = [(tuple(remap[i] for i in mono), c) for mono, c in x.payload]
            return RingElem(target, canonicalize(target, terms))
    raise RingMismatch(src, target)


def substitute(x, bindings, target):
    """
    Evaluate a polynomial at `bindings` (symbol name -> RingElem of `target`).
    Symbols without a binding map to the symbol of the same name in `target`.
    Monomials are multiplied left to right in their stored order.
    """
    desc = x.descriptor
    if desc.kind != POLY:
        return coerce(x, target)
    total = ring_zero(target)
    for mono, coeff in x.payload:
        if not mono:
            total = ring_add(total, ring_from_int(target, coeff))
            continue
        factors = []
        for index in mono:
            name = desc.symbols[index]
            factors.append(bindings[name] if name in bindings else symbol(target, name))
        term = factors[0]
        for factor in factors[1:]:
            term = ring_mul(term, factor)
        total = ring_add(total, scale(term, coeff))
    return total


def elements(desc):
    """
    A finite, deterministic list of sample elements for concrete rings.
    Small finite rings are enumerated completely.
    """
    if desc.kind == INTEGERS:
        return [ring_from_int(desc, k) for k in (-1, 0, 1, 2)]
    if desc.kind == MODULAR:
        values = range(desc.modulus) if desc.modulus <= 4 else (0, 1, 2, desc.modulus - 1)
        return [ring_from_int(desc, k) for k in values]
    if desc.kind == IDEAL:
        return [ring_from_int(desc, k) for k in range(0, desc.modulus, desc.generator)]
    return [symbol(desc, name) for name in desc.symbols]


# =========================
# RENDERING
# =========================

def to_text(x):
    """Stable text form: explicit '*', no spaces, factor order as stored."""
    desc = x.descriptor
    if desc.kind != POLY:
        return str(x.payload)
    if not x.payload:
        return "0"

    parts = []
    for mono, coeff in x.payload:
        names = "*".join(desc.symbols[i] for i in mono)
        if not names:
            parts.append(str(coeff))
        elif coeff == 1:
            parts.append(names)
        elif coeff == -1:
            parts.append("-" + names)
        else:
            parts.append(f"{coeff}*{names}")
    return parts[0] + "".join(p if p.startswith("-") else "+" + p for p in parts[1:])


def to_sympy(x):
    """sympy expression for x; noncommutative rings use noncommutative symbols."""
    desc = x.descriptor
    if desc.kind != POLY:
        return sympy.Integer(x.payload)
    syms = [sympy.Symbol(name, commutative=desc.commutative) for name in desc.symbols]
    return sympy.Add(*[
        sympy.Integer(coeff) * sympy.Mul(*[syms[i] for i in mono])
        for mono, coeff in x.payload
    ])
