"""Quaternary linear codes in canonical generator form."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import linalg
from .errors import CapacityError, DomainError
from .linalg import F4Matrix

MAX_ENUM_DIM = 12
_LOW_DIM = 6  # rows enumerated eagerly per chunk in minimum_weight


@dataclass(frozen=True)
class LinearCode:
    """An ``[n, k]`` code stored by its reduced row-echelon generator.

    Build instances with :func:`from_generator`; the constructor itself
    trusts that ``gen`` is already canonical with full row rank.  Equality is
    equality of canonical generators, which is equality of codes.
    """

    gen: F4Matrix

    @property
    def n(self) -> int:
        return self.gen.ncols

    @property
    def k(self) -> int:
        return self.gen.nrows

    def __str__(self) -> str:
        return str(self.gen)


@dataclass(frozen=True)
class CodeProfile:
    n: int
    k: int
    d: int
    dual_distance: int
    is_lcd: bool

    def to_record(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d,
                "dual_distance": self.dual_distance, "is_lcd": self.is_lcd}


def from_generator(m: F4Matrix | Sequence[Sequence[int]]) -> LinearCode:
    """Canonical code spanned by the rows of ``m``; dependent rows are allowed."""
    if not isinstance(m, F4Matrix):
        m = F4Matrix.from_rows(m)
    r, rk, _ = linalg.rref(m)
    if rk == 0:
        raise DomainError("the zero code has no canonical representative")
    return LinearCode(F4Matrix(r.rows[:rk], m.ncols))


# --- packed codeword arithmetic ---------------------------------------------
# Coordinate i lives in bits 2i (coefficient of 1) and 2i+1 (coefficient of w),
# so addition is XOR and the weight is a popcount.


def pack(v: Sequence[int]) -> int:
    w = 0
    for i, a in enumerate(v):
        w |= a << (2 * i)
    return w


def unpack(w: int, n: int) -> tuple[int, ...]:
    return tuple((w >> (2 * i)) & 3 for i in range(n))


def low_mask(n: int) -> int:
    return int("01" * n, 2) if n else 0


def packed_multiples(g: int, mask: int) -> tuple[int, int, int, int]:
    """``(0, g, w*g, w^2*g)`` for a packed word ``g``."""
    lo = g & mask
    hi = (g >> 1) & mask
    # w*(b0 + b1 w) = b1 + (b0 + b1) w
    ww = hi | ((lo ^ hi) << 1)
    lo2, hi2 = hi, lo ^ hi
    ww2 = hi2 | ((lo2 ^ hi2) << 1)
    return (0, g, ww, ww2)


def packed_span(rows: Sequence[int], mask: int) -> list[int]:
    """All combinations of packed rows, ordered as base-4 counters with the last row fastest."""
    span = [0]
    for g in rows:
        mults = packed_multiples(g, mask)
        span = [s ^ m for s in span for m in mults]
    return span


def packed_weight(w: int, mask: int) -> int:
    return ((w | (w >> 1)) & mask).bit_count()


# --- code operations ---------------------------------------------------------


def _check_dim(k: int) -> None:
    if k > MAX_ENUM_DIM:
        raise CapacityError(f"dimension {k} exceeds the enumeration limit {MAX_ENUM_DIM}")


def codewords(c: LinearCode) -> Iterator[tuple[int, ...]]:
    """All ``4**k`` codewords; coefficient vectors count in base 4 with the last basis row fastest."""
    _check_dim(c.k)
    rows = c.gen.rows
    n = c.n
    for coeffs in itertools.product(range(4), repeat=c.k):
        w = (0,) * n
        for a, g in zip(coeffs, rows):
            if a:
                w = linalg.axpy(a, g, w)
        yield w


def _weights(c: LinearCode) -> Iterator[int]:
    """Weights of all codewords, zero word first."""
    _check_dim(c.k)
    mask = low_mask(c.n)
    packed = [pack(r) for r in c.gen.rows]
    split = max(0, c.k - _LOW_DIM)
    low = packed_span(packed[split:], mask)
    for h in packed_span(packed[:split], mask):
        for s in low:
            yield packed_weight(h ^ s, mask)


def minimum_weight(c: LinearCode) -> int:
    it = _weights(c)
    next(it)  # zero word
    return min(it)


def weight_distribution(c: LinearCode) -> list[int]:
    """Histogram ``A[0..n]`` of codeword weights over all ``4**k`` codewords."""
    hist = [0] * (c.n + 1)
    for w in _weights(c):
        hist[w] += 1
    return hist


def hermitian_dual(c: LinearCode) -> LinearCode | None:
    """The Hermitian dual ``[n, n-k]`` code, or ``None`` when the dual is the zero code."""
    if c.k == c.n:
        return None
    ker = linalg.right_kernel(linalg.conjugate(c.gen))
    return from_generator(ker)


def hermitian_dual_distance(c: LinearCode) -> int:
    """Minimum weight of the Hermitian dual; ``n + 1`` if the dual is zero."""
    dual = hermitian_dual(c)
    if dual is None:
        return c.n + 1
    return minimum_weight(dual)


def zero_coordinates(c: LinearCode) -> list[int]:
    """Coordinates (0-based) where every codeword vanishes."""
    return [j for j in range(c.n) if not any(r[j] for r in c.gen.rows)]


def puncture(c: LinearCode, coords: Iterable[int]) -> LinearCode:
    """Delete the given 0-based coordinates from every codeword.

    The dimension of the result may be smaller than ``c.k`` when non-zero
    coordinates are removed; puncturing down to the zero code is an error.
    """
    drop = set(coords)
    for j in drop:
        if not 0 <= j < c.n:
            raise DomainError(f"coordinate {j} out of range for length {c.n}")
    keep = [j for j in range(c.n) if j not in drop]
    if not keep:
        raise DomainError("cannot puncture every coordinate")
    if not drop:
        return c
    rows = tuple(tuple(r[j] for j in keep) for r in c.gen.rows)
    return from_generator(F4Matrix(rows, len(keep)))


def profile(c: LinearCode) -> CodeProfile:
    from .lcd import is_hermitian_lcd

    return CodeProfile(c.n, c.k, minimum_weight(c), hermitian_dual_distance(c), is_hermitian_lcd(c))


def projective_points(k: int) -> list[tuple[int, ...]]:
    """One representative per 1-dimensional subspace of GF(4)^k, leading entry 1, in lex order."""
    pts = []
    for v in itertools.product(range(4), repeat=k):
        lead = next((a for a in v if a), 0)
        if lead == 1:
            pts.append(v)
    return pts


def simplex_code(k: int) -> LinearCode:
    """The ``[(4**k - 1)/3, k]`` simplex code; every nonzero codeword has weight ``4**(k-1)``."""
    if not 2 <= k <= 4:
        raise DomainError(f"simplex_code supports 2 <= k <= 4, got {k}")
    cols = projective_points(k)
    rows = tuple(tuple(p[i] for p in cols) for i in range(k))
    return from_generator(F4Matrix(rows, len(cols)))
