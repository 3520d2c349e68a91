"""Ordinals below epsilon-zero in Cantor normal form.

An :class:`Ordinal` is an immutable, strictly decreasing sequence of
``(exponent, coefficient)`` terms, where every exponent is itself an
``Ordinal`` and every coefficient is a positive ``int``.  The empty sequence
is zero.  Because the representation is canonical, structural equality is
ordinal equality.

Text form (ASCII, whitespace ignored)::

    ordinal := "0" | term ("+" term)*
    term    := nat | "w" ("^" exp)? ("*" nat)?
    exp     := nat | "w" | "(" ordinal ")"

so ``w*2+3``, ``w^2+w`` and ``w^(w)+1`` are all valid.  The parser refuses
input that is not already in normal form, e.g. ``3+w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from .errors import OrdinalNormalizationError, OrdinalSyntaxError

__all__ = [
    "Ordinal",
    "Order",
    "ZERO",
    "ONE",
    "OMEGA",
    "as_ordinal",
    "compare",
    "add",
    "is_limit",
    "is_successor",
    "split",
    "successor",
    "parse",
    "format_ordinal",
]

OrdinalLike = Union["Ordinal", int]


class Order(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Ordinal:
    terms: Tuple[Tuple["Ordinal", int], ...] = ()

    def __post_init__(self):
        prev = None
        for exponent, coefficient in self.terms:
            if not isinstance(exponent, Ordinal):
                raise TypeError(f"exponent must be an Ordinal, got {exponent!r}")
            if not isinstance(coefficient, int) or coefficient < 1:
                raise ValueError(f"coefficient must be a positive int, got {coefficient!r}")
            if prev is not None and _cmp(exponent, prev) >= 0:
                raise ValueError("exponents must be strictly decreasing")
            prev = exponent

    @classmethod
    def from_int(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("ordinals are non-negative")
        return cls(((ZERO, n),)) if n else ZERO

    @classmethod
    def omega_power(cls, exponent: OrdinalLike, coefficient: int = 1) -> "Ordinal":
        """Return ``w^exponent * coefficient``."""
        if coefficient == 0:
            return ZERO
        return cls(((as_ordinal(exponent), coefficient),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return all(e.is_zero for e, _ in self.terms)

    @property
    def leading_exponent(self) -> "Ordinal":
        return self.terms[0][0] if self.terms else ZERO

    def __int__(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __lt__(self, other):
        if not isinstance(other, (Ordinal, int)):
            return NotImplemented
        return _cmp(self, as_ordinal(other)) < 0

    def __le__(self, other):
        if not isinstance(other, (Ordinal, int)):
            return NotImplemented
        return _cmp(self, as_ordinal(other)) <= 0

    def __gt__(self, other):
        if not isinstance(other, (Ordinal, int)):
            return NotImplemented
        return _cmp(self, as_ordinal(other)) > 0

    def __ge__(self, other):
        if not isinstance(other, (Ordinal, int)):
            return NotImplemented
        return _cmp(self, as_ordinal(other)) >= 0

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return other >= 0 and self.terms == as_ordinal(other).terms
        if isinstance(other, Ordinal):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        if not isinstance(other, (Ordinal, int)):
            return NotImplemented
        return add(self, other)

    def __radd__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return add(other, self)

    def __str__(self) -> str:
        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({format_ordinal(self)!r})"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def as_ordinal(value: OrdinalLike) -> Ordinal:
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Ordinal.from_int(value)
    if isinstance(value, str):
        return parse(value)
    raise TypeError(f"cannot interpret {value!r} as an ordinal")


def _cmp(a: Ordinal, b: Ordinal) -> int:
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = _cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    return (len(a.terms) > len(b.terms)) - (len(a.terms) < len(b.terms))


def compare(a: OrdinalLike, b: OrdinalLike) -> Order:
    return Order(_cmp(as_ordinal(a), as_ordinal(b)))


def add(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """Ordinal sum ``a + b``.

    Terms of ``a`` below the leading exponent of ``b`` are swallowed, so
    ``1 + w == w`` while ``w + 1 > w``.
    """
    a, b = as_ordinal(a), as_ordinal(b)
    if b.is_zero:
        return a
    lead, lead_coeff = b.terms[0]
    kept = []
    for exponent, coefficient in a.terms:
        c = _cmp(exponent, lead)
        if c > 0:
            kept.append((exponent, coefficient))
        elif c == 0:
            lead_coeff += coefficient
            break
        else:
            break
    return Ordinal(tuple(kept) + ((lead, lead_coeff),) + b.terms[1:])


def is_limit(a: OrdinalLike) -> bool:
    """True for nonzero ordinals without a finite part.  Zero is not a limit."""
    a = as_ordinal(a)
    return bool(a.terms) and not a.terms[-1][0].is_zero


def is_successor(a: OrdinalLike) -> bool:
    a = as_ordinal(a)
    return bool(a.terms) and a.terms[-1][0].is_zero


def split(a: OrdinalLike) -> Tuple[Ordinal, int]:
    """Return ``(limit_part, finite_part)`` with ``a == limit_part + finite_part``."""
    a = as_ordinal(a)
    if a.terms and a.terms[-1][0].is_zero:
        return Ordinal(a.terms[:-1]), a.terms[-1][1]
    return a, 0


def successor(a: OrdinalLike) -> Ordinal:
    return add(a, ONE)


def format_ordinal(a: OrdinalLike) -> str:
    a = as_ordinal(a)
    if a.is_zero:
        return "0"
    parts = []
    for exponent, coefficient in a.terms:
        if exponent.is_zero:
            parts.append(str(coefficient))
            continue
        text = "w"
        if exponent.is_finite:
            n = int(exponent)
            if n != 1:
                text += f"^{n}"
        else:
            text += f"^({format_ordinal(exponent)})"
        if coefficient != 1:
            text += f"*{coefficient}"
        parts.append(text)
    return "+".join(parts)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str):
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise OrdinalSyntaxError(f"expected {char!r}, found {found!r}", self.pos)
        self.pos += 1

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.text[start] if start < len(self.text) else "end of input"
            raise OrdinalSyntaxError(f"expected a number, found {found!r}", start)
        return int(self.text[start:self.pos])

    def ordinal(self) -> Ordinal:
        terms = []
        start = self.pos
        while True:
            self.skip()
            term_pos = self.pos
            exponent, coefficient = self.term()
            if coefficient == 0:
                if not terms and self.peek() in ("", ")") and exponent.is_zero:
                    return ZERO
                raise OrdinalNormalizationError("zero coefficient", term_pos)
            if terms and _cmp(exponent, terms[-1][0]) >= 0:
                raise OrdinalNormalizationError(
                    "exponents must be strictly decreasing", term_pos
                )
            terms.append((exponent, coefficient))
            if self.peek() != "+":
                break
            self.pos += 1
        if not terms:
            raise OrdinalSyntaxError("empty ordinal", start)
        return Ordinal(tuple(terms))

    def term(self) -> Tuple[Ordinal, int]:
        c = self.peek()
        if c.isdigit():
            return ZERO, self.nat()
        if c != "w":
            raise OrdinalSyntaxError(f"unexpected {c or 'end of input'!r}", self.pos)
        self.pos += 1
        exponent = ONE
        if self.peek() == "^":
            self.pos += 1
            exponent = self.exponent()
        coefficient = 1
        if self.peek() == "*":
            self.pos += 1
            coefficient = self.nat()
        return exponent, coefficient

    def exponent(self) -> Ordinal:
        c = self.peek()
        if c.isdigit():
            return Ordinal.from_int(self.nat())
        if c == "w":
            self.pos += 1
            return OMEGA
        if c == "(":
            self.pos += 1
            inner = self.ordinal()
            self.expect(")")
            return inner
        raise OrdinalSyntaxError(f"bad exponent {c or 'end of input'!r}", self.pos)


def parse(text: str) -> Ordinal:
    """Parse ordinal text; raises on syntax errors and on non-normal input."""
    p = _Parser(text)
    result = p.ordinal()
    p.skip()
    if p.pos != len(text):
        raise OrdinalSyntaxError(f"unexpected {text[p.pos]!r}", p.pos)
    return result
