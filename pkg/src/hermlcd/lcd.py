"""Hermitian LCD certification, the anisotropic decomposition, length
extension, and dual-distance promotion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .code import (
    LinearCode,
    from_generator,
    hermitian_dual,
    minimum_weight,
    puncture,
    zero_coordinates,
)
from .errors import DomainError, InvariantViolation, PreconditionError
from .gf4 import CONJ, NONZERO
from .linalg import F4Matrix, hamming_weight, hermitian_inner_product


def is_hermitian_lcd(c: LinearCode) -> bool:
    """True iff the Hermitian Gram matrix of the generator is nonsingular."""
    return linalg.det(linalg.hermitian_gram(c.gen)) != 0


def is_hermitian_lcd_oracle(c: LinearCode) -> bool:
    """Definition-level check: ``C`` meets its Hermitian dual only in zero.

    The dimensions add up to ``n``, so the intersection is trivial exactly
    when the stacked generators have full rank.
    """
    dual = hermitian_dual(c)
    if dual is None:
        return True
    return linalg.rank(linalg.vstack(c.gen, dual.gen)) == c.n


def has_dual_distance_one(c: LinearCode) -> bool:
    """A weight-1 dual vector exists iff some coordinate is identically zero."""
    return bool(zero_coordinates(c))


# --- anisotropic vectors -----------------------------------------------------


def _anisotropic_combination(rows: Sequence[tuple[int, ...]]) -> tuple[tuple[int, ...], int]:
    """Return ``(x, i)`` with ``(x, x)_h != 0`` and ``x = rows[i] + lam * rows[j]`` (``j > i``) or ``x = rows[i]``.

    Over GF(4), ``(x, x)_h`` is the parity of the weight of ``x``.
    """
    for i, g in enumerate(rows):
        if hamming_weight(g) % 2:
            return g, i
    k = len(rows)
    for i in range(k):
        for j in range(i + 1, k):
            c = hermitian_inner_product(rows[i], rows[j])
            if not c:
                continue
            # (g_i + lam g_j, same)_h = conj(lam) c + lam conj(c) = lam c (lam + c)
            for lam in NONZERO:
                if lam != c:
                    return linalg.axpy(lam, rows[j], rows[i]), i
    raise PreconditionError("every codeword is Hermitian self-orthogonal; the code is not LCD")


def find_anisotropic_codeword(c: LinearCode) -> tuple[int, ...]:
    return _anisotropic_combination(c.gen.rows)[0]


def _split_off(rows: Sequence[tuple[int, ...]]) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    """Pick an anisotropic ``x`` in the span of ``rows`` and make the remaining
    rows Hermitian-orthogonal to it.  ``(x, x)_h == 1`` so no division is needed.
    """
    x, drop = _anisotropic_combination(rows)
    rest = []
    for i, g in enumerate(rows):
        if i == drop:
            continue
        a = hermitian_inner_product(x, g)
        rest.append(linalg.axpy(CONJ[a], x, g) if a else g)
    return x, rest


@dataclass(frozen=True)
class Decomposition:
    """Generator of the form ``(x; rest)`` for k = 2 or ``(x; x_prime; rest)`` for k >= 3.

    ``x`` is anisotropic and Hermitian-orthogonal to every other row; when
    present, ``x_prime`` is anisotropic and orthogonal to ``rest``.
    """

    x: tuple[int, ...]
    x_prime: tuple[int, ...] | None
    rest: F4Matrix
    k: int

    def generator(self) -> F4Matrix:
        head = (self.x,) if self.x_prime is None else (self.x, self.x_prime)
        return F4Matrix(head + self.rest.rows, len(self.x))

    def violations(self) -> list[str]:
        """Names of the structural conditions that fail (empty when sound)."""
        ip = hermitian_inner_product
        out = []
        if ip(self.x, self.x) == 0:
            out.append("(x,x)_h != 0")
        if any(ip(self.x, g) for g in self.rest.rows):
            out.append("x conj(rest)^T = 0")
        if self.x_prime is not None:
            if ip(self.x_prime, self.x_prime) == 0:
                out.append("(x',x')_h != 0")
            if ip(self.x, self.x_prime):
                out.append("(x,x')_h = 0")
            if any(ip(self.x_prime, g) for g in self.rest.rows):
                out.append("x' conj(rest)^T = 0")
        if self.generator().nrows != self.k or linalg.rank(self.generator()) != self.k:
            out.append("rows form a basis")
        return out


def hermitian_decompose(c: LinearCode) -> Decomposition:
    if c.k < 2:
        raise DomainError("decomposition needs dimension at least 2")
    if not is_hermitian_lcd(c):
        raise PreconditionError("code is not Hermitian LCD")
    x, g1 = _split_off(c.gen.rows)
    if c.k == 2:
        return Decomposition(x, None, F4Matrix(tuple(g1), c.n), 2)
    # span(g1) is LCD: its Gram matrix is the lower block of a block-diagonal Gram
    xp, g2 = _split_off(g1)
    return Decomposition(x, xp, F4Matrix(tuple(g2), c.n), c.k)


# --- Lemma-2 style length extension ------------------------------------------


def _require_extendable(c: LinearCode) -> None:
    if c.k < 2:
        raise PreconditionError("extension needs dimension k >= 2")
    if not is_hermitian_lcd(c):
        raise PreconditionError("extension needs a Hermitian LCD code")
    if has_dual_distance_one(c):
        raise PreconditionError("extension needs Hermitian dual distance >= 2")


def extension_generator(c0: LinearCode) -> tuple[F4Matrix, Decomposition]:
    """Decomposed generator with the column ``h = (1, 1, 0, ..., 0)^T`` appended.

    Rows are in decomposition order (not canonical), so the Gram determinant
    of the result is 1 for k = 2 and ``det Gram(rest)`` for k >= 3.
    """
    _require_extendable(c0)
    dec = hermitian_decompose(c0)
    g = dec.generator()
    h = (1, 1) + (0,) * (c0.k - 2)
    rows = tuple(r + (b,) for r, b in zip(g.rows, h))
    return F4Matrix(rows, c0.n + 1), dec


def extend_lcd(c0: LinearCode) -> LinearCode:
    """Hermitian LCD ``[n+1, k, d]`` code with ``d`` in ``{d0, d0+1}`` and dual distance >= 2."""
    return from_generator(extension_generator(c0)[0])


def promote_dual_distance(c: LinearCode) -> LinearCode:
    """Trade the ``l`` zero coordinates of an LCD code for ``l`` extension steps.

    The result has the same length and dimension, minimum weight at least
    that of ``c``, and Hermitian dual distance at least 2.  Every
    intermediate code is re-checked.
    """
    if c.k < 2:
        raise PreconditionError("promotion needs dimension k >= 2")
    if not is_hermitian_lcd(c):
        raise PreconditionError("promotion needs a Hermitian LCD code")
    zeros = zero_coordinates(c)
    if not zeros:
        raise PreconditionError("promotion needs Hermitian dual distance 1 (a zero coordinate)")
    d = minimum_weight(c)
    cur = puncture(c, zeros)
    _check_step(cur, c.n - len(zeros), c.k, d, d, "puncture")
    for step in range(len(zeros)):
        prev_d = minimum_weight(cur)
        cur = extend_lcd(cur)
        _check_step(cur, cur.n, c.k, prev_d, prev_d + 1, f"extension {step + 1}")
    return cur


def _check_step(c: LinearCode, n: int, k: int, dlo: int, dhi: int, where: str) -> None:
    problems = []
    if c.n != n:
        problems.append(f"length {c.n} != {n}")
    if c.k != k:
        problems.append(f"dimension {c.k} != {k}")
    if not is_hermitian_lcd(c):
        problems.append("not Hermitian LCD")
    if has_dual_distance_one(c):
        problems.append("dual distance 1")
    d = minimum_weight(c)
    if not dlo <= d <= dhi:
        problems.append(f"minimum weight {d} outside [{dlo}, {dhi}]")
    if problems:
        raise InvariantViolation(f"{where}: " + "; ".join(problems) + f"\n{c.gen}")
