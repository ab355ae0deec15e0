"""Arithmetic in the field with four elements.

Elements are encoded as 2-bit integers: ``0, 1, 2, 3`` stand for
``0, 1, w, w^2`` where ``w^2 = w + 1``.  Bit 0 is the coefficient of 1 and
bit 1 is the coefficient of ``w``, so field addition is plain XOR.
"""

from __future__ import annotations

from .errors import DomainError

ZERO, ONE, W, W2 = 0, 1, 2, 3
ELEMENTS = (ZERO, ONE, W, W2)
NONZERO = (ONE, W, W2)

SYMBOLS = "01wW"
_PARSE = {ch: i for i, ch in enumerate(SYMBOLS)}

# discrete log base w for nonzero elements: 1 -> 0, w -> 1, w^2 -> 2
_LOG = (None, 0, 1, 2)
_EXP = (ONE, W, W2)


def _mul_entry(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return _EXP[(_LOG[a] + _LOG[b]) % 3]


ADD = tuple(tuple(a ^ b for b in ELEMENTS) for a in ELEMENTS)
MUL = tuple(tuple(_mul_entry(a, b) for b in ELEMENTS) for a in ELEMENTS)
CONJ = tuple(MUL[a][a] for a in ELEMENTS)
# INV[0] is a placeholder so the table can be indexed branch-free in loops
INV = (0,) + tuple(_EXP[(-_LOG[a]) % 3] for a in NONZERO)


def _check(a: int) -> int:
    if a not in (0, 1, 2, 3):
        raise DomainError(f"not a GF(4) element code: {a!r}")
    return a


def add(a: int, b: int) -> int:
    return ADD[_check(a)][_check(b)]


def mul(a: int, b: int) -> int:
    return MUL[_check(a)][_check(b)]


def inv(a: int) -> int:
    """Multiplicative inverse; equal to ``a**2`` for every nonzero ``a``."""
    if _check(a) == 0:
        raise DomainError("zero has no multiplicative inverse")
    return INV[a]


def conj(a: int) -> int:
    """Frobenius conjugation ``a -> a**2``, an involutive automorphism."""
    return CONJ[_check(a)]


def parse_symbol(ch: str) -> int:
    try:
        return _PARSE[ch]
    except KeyError:
        raise DomainError(f"unknown GF(4) symbol {ch!r}; expected one of {SYMBOLS!r}") from None


def format_symbol(a: int) -> str:
    return SYMBOLS[_check(a)]
