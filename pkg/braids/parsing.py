"""
Text front end: ring descriptors, ring expressions, parametrized braid
words and Steinberg letters.

Grammar:
- ring    int | mod:<m> | poly:<sym>,...[,noncomm][,mod<m>] | ideal:<g>,<m>
- word    letter+ | '1'
- letter  'y' index ['[' expr ']'] ['^-1']
- xletter 'x' '{' rootspec '}' ['[' expr ']']
- index   digits ['p']                    (y2p is the fork index 2')
- expr    term (('+' | '-') term)*
- term    factor ('*' factor)*
- factor  ['-'] (digits | symbol | '(' expr ')')
Every error carries the offset and the set of tokens that would have been accepted.
"""
import logging
import re

from .braid import BraidLetter
from .errors import ParabraidError, ParseError, UnknownGenerator
from .pbg import ParamLetter
from .ring import (
    POLY,
    SYMBOL_RE,
    ideal,
    integers,
    is_zero,
    modular,
    poly,
    ring_add,
    ring_from_int,
    ring_mul,
    ring_neg,
    ring_zero,
    scale,
    symbol,
)
from .rootsys import FORK, require_root, root_from_text, simple_labels
from .steinberg import StLetter

logger = logging.getLogger(__name__)

NUMBER_RE = re.compile(r"\d+")
NAME_RE = re.compile(r"[a-z][a-z0-9_]*")
INDEX_RE = re.compile(r"(\d+)(p?)")
SIGNED_INDEX_RE = re.compile(r"([+-])(\d+)")


# =========================
# RING DESCRIPTORS
# =========================

def parse_ring(text):
    """Ring descriptor from its command-line form (see module docstring)."""
    text = text.strip()
    kind, _, rest = text.partition(":")
    try:
        if kind == "int" and not rest:
            return integers()
        if kind == "mod":
            return modular(_int(rest, len(kind) + 1))
        if kind == "ideal":
            g, _, m = rest.partition(",")
            return ideal(_int(g, len(kind) + 1), _int(m, len(kind) + len(g) + 2))
        if kind == "poly":
            return _parse_poly(rest, len(kind) + 1)
    except ParseError:
        raise
    except ParabraidError as e:
        raise ParseError(str(e), offset=0) from e
    raise ParseError(f"unknown ring {text!r}", offset=0, expected=("int", "mod:", "poly:", "ideal:"))


def _int(token, offset):
    if not NUMBER_RE.fullmatch(token.strip()):
        raise ParseError(f"expected a number, got {token!r}", offset=offset, expected=("number",))
    return int(token)


def _parse_poly(rest, offset):
    symbols, commutative, modulus = [], True, None
    for part in rest.split(","):
        part = part.strip()
        if part == "noncomm":
            commutative = False
        elif part.startswith("mod") and NUMBER_RE.fullmatch(part[3:]):
            modulus = int(part[3:])
        elif SYMBOL_RE.match(part):
            symbols.append(part)
        else:
            raise ParseError(f"bad poly option {part!r}", offset=offset, expected=("symbol", "noncomm", "mod<m>"))
        offset += len(part) + 1
    if not symbols:
        raise ParseError("poly ring needs at least one symbol", offset=offset, expected=("symbol",))
    return poly(symbols, commutative=commutative, modulus=modulus)


# =========================
# SCANNER
# =========================

class Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        self.skip_space()
        return self.pos >= len(self.text)

    def peek(self, literal):
        self.skip_space()
        return self.text.startswith(literal, self.pos)

    def take(self, literal):
        if self.peek(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal, expected=None):
        if not self.take(literal):
            self.fail(f"expected {literal!r}", expected or (repr(literal),))

    def match(self, pattern):
        self.skip_space()
        found = pattern.match(self.text, self.pos)
        if found:
            self.pos = found.end()
        return found

    def fail(self, message, expected=()):
        raise ParseError(message, offset=len(self.text[:self.pos].encode("utf-8")), expected=expected)


# =========================
# RING EXPRESSIONS
# =========================

def _lift(ring, value):
    if isinstance(value, int):
        return ring_from_int(ring, value) if value else ring_zero(ring)
    return value


def _add(ring, x, y):
    if isinstance(x, int) and isinstance(y, int):
        return x + y
    return ring_add(_lift(ring, x), _lift(ring, y))


def _mul(x, y):
    if isinstance(x, int) and isinstance(y, int):
        return x * y
    if isinstance(x, int):
        return scale(y, x)
    if isinstance(y, int):
        return scale(x, y)
    return ring_mul(x, y)


def _neg(x):
    return -x if isinstance(x, int) else ring_neg(x)


def _expr(scanner, ring):
    value = _term(scanner, ring)
    while True:
        if scanner.take("+"):
            value = _add(ring, value, _term(scanner, ring))
        elif scanner.take("-"):
            value = _add(ring, value, _neg(_term(scanner, ring)))
        else:
            return value


def _term(scanner, ring):
    value = _factor(scanner, ring)
    while scanner.take("*"):
        value = _mul(value, _factor(scanner, ring))
    return value


def _factor(scanner, ring):
    if scanner.take("-"):
        return _neg(_factor(scanner, ring))
    if scanner.take("("):
        value = _expr(scanner, ring)
        scanner.expect(")")
        return value
    start = scanner.pos
    number = scanner.match(NUMBER_RE)
    if number:
        return int(number.group())
    name = scanner.match(NAME_RE)
    if name:
        if ring.kind != POLY or name.group() not in ring.symbols:
            scanner.pos = start
            scanner.fail(f"unknown symbol {name.group()!r} for ring {ring}", ("number", "'('", "'-'"))
        return symbol(ring, name.group())
    scanner.fail("expected a ring element", ("number", "symbol", "'('", "'-'"))


def _finish_expr(scanner, ring):
    start = scanner.pos
    try:
        return _lift(ring, _expr(scanner, ring))
    except ParseError:
        raise
    except ParabraidError as e:
        scanner.pos = start
        scanner.fail(str(e))


def parse_ring_expr(ring, text):
    scanner = Scanner(text)
    value = _finish_expr(scanner, ring)
    if not scanner.at_end():
        scanner.fail("unexpected input after expression", ("'+'", "'-'", "'*'", "end of input"))
    return value


# =========================
# WORDS
# =========================

def _label(rs, scanner, digits, fork):
    token = digits + ("p" if fork else "")
    label = FORK if (fork and digits == "2") else (None if fork else digits)
    if label is None or label not in simple_labels(rs):
        raise UnknownGenerator("y" + token, offset=scanner.pos - len(token) - 1)
    return label


def _y_letter(rs, ring, scanner):
    found = scanner.match(INDEX_RE)
    if not found:
        scanner.fail("expected a generator index", ("digits",))
    label = _label(rs, scanner, found.group(1), bool(found.group(2)))
    param = ring_zero(ring)
    if scanner.take("["):
        param = _finish_expr(scanner, ring)
        scanner.expect("]")
    exp = -1 if scanner.take("^-1") else 1
    return ParamLetter(label, param, exp)


def parse_word(rs, ring, text):
    """Parametrized braid word; '1' is the empty word."""
    scanner = Scanner(text)
    if scanner.take("1") and scanner.at_end():
        return ()
    scanner.pos = 0
    letters = []
    while not scanner.at_end():
        if not scanner.take("y"):
            scanner.fail("expected a letter", ("'y'",) if letters else ("'y'", "'1'"))
        letters.append(_y_letter(rs, ring, scanner))
    if not letters:
        scanner.fail("empty word", ("'y'", "'1'"))
    return tuple(letters)


def parse_braid_word(rs, text, ring=None):
    """Plain braid word; parameters must be zero."""
    word = parse_word(rs, ring or integers(), text)
    if any(not is_zero(letter.param) for letter in word):
        raise ParseError("plain braid words carry no parameters", offset=0)
    return tuple(BraidLetter(letter.label, letter.exp) for letter in word)


def _root_spec(rs, scanner):
    start = scanner.pos
    end = scanner.text.find("}", start)
    if end < 0:
        scanner.fail("unterminated root", ("'}'",))
    body = scanner.text[start:end].strip()
    try:
        if "e" in body:
            root = root_from_text(rs, body)
        elif "," in body:
            i, _, j = body.partition(",")
            vec = [0] * rs.n
            vec[int(i) - 1] += 1
            vec[int(j) - 1] -= 1
            root = require_root(rs, vec)
        else:
            vec = [0] * rs.n
            parts = SIGNED_INDEX_RE.findall(body)
            if "".join(s + d for s, d in parts) != body.replace(" ", ""):
                raise ValueError(body)
            for sign, digits in parts:
                vec[int(digits) - 1] += 1 if sign == "+" else -1
            root = require_root(rs, vec)
    except (ValueError, IndexError, ParabraidError):
        scanner.fail(f"{body!r} is not a root of {rs}", ("'i,j'", "'+i-j'", "'e1-e2'"))
    scanner.pos = end + 1
    return root


def parse_steinberg_word(rs, ring, text):
    """Word of letters x{rootspec}[expr]; '1' is the empty word."""
    scanner = Scanner(text)
    if scanner.take("1") and scanner.at_end():
        return ()
    scanner.pos = 0
    letters = []
    while not scanner.at_end():
        if not scanner.take("x"):
            scanner.fail("expected a Steinberg letter", ("'x'",))
        scanner.expect("{")
        root = _root_spec(rs, scanner)
        param = ring_from_int(ring, 1) if ring.unital else None
        if scanner.take("["):
            param = _finish_expr(scanner, ring)
            scanner.expect("]")
        if param is None:
            scanner.fail("non-unital ring letters need a parameter", ("'['",))
        letters.append(StLetter(root, param))
    return tuple(letters)
