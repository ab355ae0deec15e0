"""Dense exact linear algebra over GF(4).

Vectors are plain tuples of element codes (see :mod:`hermlcd.gf4`).
Matrices are immutable :class:`F4Matrix` values holding a tuple of row
tuples; the column count is stored explicitly so that matrices with no rows
(e.g. a trivial kernel basis) still know their width.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .errors import DomainError
from .gf4 import CONJ, INV, MUL, format_symbol, parse_symbol

F4Vector = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class F4Matrix:
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self) -> None:
        for r in self.rows:
            if len(r) != self.ncols:
                raise DomainError(f"row of length {len(r)} in a matrix with {self.ncols} columns")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> F4Matrix:
        rows = tuple(tuple(int(a) for a in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DomainError("cannot infer the width of a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            for a in r:
                if a not in (0, 1, 2, 3):
                    raise DomainError(f"not a GF(4) element code: {a!r}")
        return cls(rows, ncols)

    @classmethod
    def identity(cls, k: int) -> F4Matrix:
        return cls(tuple(tuple(int(i == j) for j in range(k)) for i in range(k)), k)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> F4Matrix:
        return cls(tuple((0,) * ncols for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __str__(self) -> str:
        return format_matrix(self)


def hamming_weight(v: Sequence[int]) -> int:
    return sum(1 for a in v if a)


def hermitian_inner_product(x: Sequence[int], y: Sequence[int]) -> int:
    """Return ``sum(x_i * conj(y_i))``."""
    if len(x) != len(y):
        raise DomainError(f"length mismatch: {len(x)} vs {len(y)}")
    s = 0
    for a, b in zip(x, y):
        s ^= MUL[a][CONJ[b]]
    return s


def scale(c: int, v: Sequence[int]) -> tuple[int, ...]:
    row = MUL[c]
    return tuple(row[a] for a in v)


def axpy(c: int, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    """Return ``c*x + y``."""
    row = MUL[c]
    return tuple(row[a] ^ b for a, b in zip(x, y))


def conj_vector(v: Sequence[int]) -> tuple[int, ...]:
    return tuple(CONJ[a] for a in v)


def rref(m: F4Matrix) -> tuple[F4Matrix, int, list[int]]:
    """Reduced row-echelon form.

    Columns are scanned left to right; the pivot is the topmost remaining
    row with a nonzero entry and is normalized to 1.  Zero rows are kept at
    the bottom so ``R`` has the same shape as ``m``.

    Returns ``(R, rank, pivots)``.
    """
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            tab = MUL[INV[piv]]
            rows[r] = [tab[a] for a in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f:
                tab = MUL[f]
                rows[i] = [a ^ tab[b] for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return F4Matrix(tuple(tuple(x) for x in rows), ncols), r, pivots


def rank(m: F4Matrix) -> int:
    return rref(m)[1]


def det(m: F4Matrix) -> int:
    """Determinant by Gaussian elimination; row swaps need no sign in characteristic 2."""
    n = m.nrows
    if n != m.ncols:
        raise DomainError(f"determinant of a non-square {m.nrows}x{m.ncols} matrix")
    rows = [list(r) for r in m.rows]
    d = 1
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return 0
        rows[c], rows[p] = rows[p], rows[c]
        piv = rows[c][c]
        d = MUL[d][piv]
        tab = MUL[INV[piv]]
        prow = [tab[a] for a in rows[c]]
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                tf = MUL[f]
                rows[i] = [a ^ tf[b] for a, b in zip(rows[i], prow)]
    return d


def transpose(m: F4Matrix) -> F4Matrix:
    return F4Matrix(tuple(zip(*m.rows)) if m.rows else tuple(() for _ in range(m.ncols)), m.nrows)


def conjugate(m: F4Matrix) -> F4Matrix:
    return F4Matrix(tuple(conj_vector(r) for r in m.rows), m.ncols)


def conj_transpose(m: F4Matrix) -> F4Matrix:
    return conjugate(transpose(m))


def matmul(a: F4Matrix, b: F4Matrix) -> F4Matrix:
    if a.ncols != b.nrows:
        raise DomainError(f"cannot multiply {a.shape} by {b.shape}")
    cols = [b.column(j) for j in range(b.ncols)]
    out = []
    for r in a.rows:
        out.append(tuple(_dot(r, c) for c in cols))
    return F4Matrix(tuple(out), b.ncols)


def _dot(x: Sequence[int], y: Sequence[int]) -> int:
    s = 0
    for a, b in zip(x, y):
        s ^= MUL[a][b]
    return s


def hermitian_gram(g: F4Matrix) -> F4Matrix:
    """``G * conj(G)^T``; entry ``(i, j)`` is the Hermitian product of rows i and j."""
    rows = g.rows
    conj_rows = [conj_vector(r) for r in rows]
    return F4Matrix(tuple(tuple(_dot(x, y) for y in conj_rows) for x in rows), len(rows))


def right_kernel(m: F4Matrix) -> F4Matrix:
    """Basis (as rows) of ``{v : m v^T = 0}``, one vector per free column."""
    r, rk, pivots = rref(m)
    n = m.ncols
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [0] * n
        v[f] = 1
        for i, p in enumerate(pivots):
            # -R[i][f] == R[i][f] in characteristic 2
            v[p] = r.rows[i][f]
        basis.append(tuple(v))
    return F4Matrix(tuple(basis), n)


def vstack(a: F4Matrix, b: F4Matrix) -> F4Matrix:
    if a.ncols != b.ncols:
        raise DomainError(f"cannot stack widths {a.ncols} and {b.ncols}")
    return F4Matrix(a.rows + b.rows, a.ncols)


# --- text format -----------------------------------------------------------


def parse_matrix(text: str) -> F4Matrix:
    """Parse the row-per-line text format; a blank line ends the matrix."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            if rows:
                break
            continue
        try:
            rows.append(tuple(parse_symbol(ch) for ch in line))
        except DomainError as e:
            raise DomainError(f"line {lineno}: {e}") from None
        if len(rows[-1]) != len(rows[0]):
            raise DomainError(f"line {lineno}: row has {len(rows[-1])} symbols, expected {len(rows[0])}")
    if not rows:
        raise DomainError("no matrix rows found")
    return F4Matrix(tuple(rows), len(rows[0]))


def read_matrix(fh: TextIO) -> F4Matrix:
    return parse_matrix(fh.read())


def format_vector(v: Sequence[int]) -> str:
    return "".join(format_symbol(a) for a in v)


def format_matrix(m: F4Matrix) -> str:
    return "\n".join(format_vector(r) for r in m.rows)
