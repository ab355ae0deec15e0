"""Vectorized kernels over stacks of small generator matrices.

Each length-``n`` vector is packed into a ``uint64`` with two bits per
coordinate (same layout as :func:`hermlcd.code.pack`), so codes of length up
to 32 are supported.  Arrays of generators have shape ``(m, k, n)`` with
``uint8`` entries, or ``(m, k)`` once packed.
"""

from __future__ import annotations

import numpy as np

from .errors import CapacityError
from .gf4 import CONJ, INV, MUL

MAX_PACKED_LEN = 32

NP_MUL = np.array(MUL, dtype=np.uint8)
NP_CONJ = np.array(CONJ, dtype=np.uint8)
NP_INV = np.array(INV, dtype=np.uint8)

_ONE = np.uint64(1)


def lane_mask(n: int) -> np.uint64:
    return np.uint64(int("01" * n, 2) if n else 0)


def pack_rows(g: np.ndarray) -> np.ndarray:
    """``(..., n)`` uint8 -> ``(...)`` uint64."""
    n = g.shape[-1]
    if n > MAX_PACKED_LEN:
        raise CapacityError(f"packed kernels support length <= {MAX_PACKED_LEN}, got {n}")
    shifts = (2 * np.arange(n, dtype=np.uint64))
    return (g.astype(np.uint64) << shifts).sum(axis=-1, dtype=np.uint64)


def _planes(p: np.ndarray, mask: np.uint64) -> tuple[np.ndarray, np.ndarray]:
    return p & mask, (p >> _ONE) & mask


def _parity(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a) & 1


def gram(p: np.ndarray, n: int) -> np.ndarray:
    """Hermitian Gram matrices ``(m, k, k)`` from packed generators ``(m, k)``."""
    mask = lane_mask(n)
    a0, a1 = _planes(p[:, :, None], mask)
    b0, b1 = _planes(p[:, None, :], mask)
    # conj(b0 + b1 w) = (b0 + b1) + b1 w
    c0, c1 = b0 ^ b1, b1
    lo = _parity((a0 & c0) ^ (a1 & c1))
    hi = _parity((a0 & c1) ^ (a1 & c0) ^ (a1 & c1))
    return (lo | (hi << 1)).astype(np.uint8)


def nonsingular(a: np.ndarray) -> np.ndarray:
    """Boolean mask of which square matrices in ``(m, k, k)`` are invertible."""
    a = a.copy()
    m, k, _ = a.shape
    ok = np.ones(m, dtype=bool)
    idx = np.arange(m)
    for c in range(k):
        has = a[:, c:, c] != 0
        ok &= has.any(axis=1)
        p = c + has.argmax(axis=1)
        row_c = a[idx, c].copy()
        a[idx, c] = a[idx, p]
        a[idx, p] = row_c
        prow = NP_MUL[NP_INV[a[idx, c, c]][:, None], a[:, c, :]]
        factors = a[:, :, c].copy()
        factors[:, c] = 0
        a ^= NP_MUL[factors[:, :, None], prow[:, None, :]]
        a[:, c, :] = prow
    return ok


def has_zero_column(p: np.ndarray, n: int) -> np.ndarray:
    mask = lane_mask(n)
    occ = np.bitwise_or.reduce(p, axis=1)
    occ = (occ | (occ >> _ONE)) & mask
    return np.bitwise_count(occ) < n


def row_weights(p: np.ndarray, n: int) -> np.ndarray:
    mask = lane_mask(n)
    return np.bitwise_count((p | (p >> _ONE)) & mask)


def _span(p: np.ndarray, mask: np.uint64) -> np.ndarray:
    m, k = p.shape
    lo, hi = _planes(p, mask)
    w1 = hi | ((lo ^ hi) << _ONE)
    w2 = (lo ^ hi) | (lo << _ONE)
    mults = np.stack([np.zeros_like(p), p, w1, w2], axis=-1)  # (m, k, 4)
    span = np.zeros((m, 1), dtype=np.uint64)
    for i in range(k):
        span = (span[:, :, None] ^ mults[:, i, None, :]).reshape(m, -1)
    return span


def min_weight(p: np.ndarray, n: int, max_elems: int = 1 << 22) -> np.ndarray:
    """Minimum nonzero codeword weight for each packed generator in ``(m, k)``."""
    m, k = p.shape
    if m == 0:
        return np.zeros(0, dtype=np.int64)
    mask = lane_mask(n)
    step = max(1, max_elems >> (2 * k))
    out = np.empty(m, dtype=np.int64)
    for s in range(0, m, step):
        span = _span(p[s:s + step], mask)
        w = np.bitwise_count((span | (span >> _ONE)) & mask)
        out[s:s + step] = w[:, 1:].min(axis=1)
    return out
