from __future__ import annotations

import itertools

import pytest

from hermlcd.code import LinearCode, from_generator
from hermlcd.linalg import F4Matrix, rank, vstack

_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)


# --- independent oracles ---------------------------------------------------
# GF(4) as F2[t]/(t^2 + t + 1): element code a = a0 + 2*a1 means a0 + a1*t.


def poly_mul(a: int, b: int) -> int:
    a0, a1, b0, b1 = a & 1, a >> 1, b & 1, b >> 1
    # (a0 + a1 t)(b0 + b1 t) = a0b0 + (a0b1 + a1b0) t + a1b1 t^2, t^2 = t + 1
    c0 = (a0 & b0) ^ (a1 & b1)
    c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1)
    return c0 | (c1 << 1)


def poly_pow(a: int, e: int) -> int:
    r = 1
    for _ in range(e):
        r = poly_mul(r, a)
    return r


def all_vectors(n: int):
    return itertools.product(range(4), repeat=n)


def in_row_space(v, code: LinearCode) -> bool:
    return rank(vstack(code.gen, F4Matrix((tuple(v),), code.n))) == code.k


def brute_min_weight(code: LinearCode) -> int:
    """Scan all of GF(4)^n and test membership by rank."""
    return min(sum(1 for a in v if a) for v in all_vectors(code.n) if any(v) and in_row_space(v, code))


def brute_herm(x, y) -> int:
    s = 0
    for a, b in zip(x, y):
        s ^= poly_mul(a, poly_pow(b, 2))
    return s


def code(*rows: str) -> LinearCode:
    from hermlcd.linalg import parse_matrix

    return from_generator(parse_matrix("\n".join(rows)))
