"""Ordinary and Gaussian binomial coefficients.

Gaussian binomials are built row by row from the q-Pascal recurrence
``[n, k] = [n-1, k-1] + x**k [n-1, k]`` starting at ``[0, 0] = 1``, so the
computation never leaves the polynomial ring.
"""

from __future__ import annotations

import math
import threading

from .polyring import ONE, ZERO, Poly, poly_add, poly_shift


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _next_row(row: list[Poly]) -> list[Poly]:
    n = len(row)
    out = [ONE]
    for k in range(1, n):
        out.append(poly_add(row[k - 1], poly_shift(row[k], k)))
    out.append(ONE)
    return out


class QBinomTable:
    """Memoized triangle of Gaussian binomials.

    Rows are filled in order, so asking for row ``n`` caches every row up
    to ``n``.  Access is guarded by a lock; the table is a pure cache and
    never changes a value once stored.
    """

    def __init__(self):
        self.memo: dict[tuple[int, int], Poly] = {(0, 0): ONE}
        self._rows: list[list[Poly]] = [[ONE]]
        self._lock = threading.Lock()

    def row(self, n: int) -> list[Poly]:
        if n < 0:
            raise ValueError(f"row index must be nonnegative, got {n}")
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows)
                new = _next_row(self._rows[-1])
                self._rows.append(new)
                for k, p in enumerate(new):
                    self.memo[m, k] = p
            return self._rows[n]

    def get(self, n: int, k: int) -> Poly:
        row = self.row(n)
        if k < 0 or k > n:
            return ZERO
        return row[k]

    def __len__(self) -> int:
        return len(self.memo)


_default_table = QBinomTable()


def default_table() -> QBinomTable:
    return _default_table


def gaussian_binomial(table: QBinomTable | None, n: int, k: int) -> Poly:
    """The Gaussian binomial ``[n, k]``; zero when ``k`` is outside ``[0, n]``.

    ``table=None`` uses a shared module-level table.
    """
    if n < 0:
        raise ValueError(f"gaussian_binomial needs n >= 0, got {n}")
    if table is None:
        table = _default_table
    return table.get(n, k)


def gaussian_binomial_pure(n: int, k: int) -> Poly:
    """Table-free variant: recomputes the needed part of the triangle."""
    if n < 0:
        raise ValueError(f"gaussian_binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return ZERO
    # only columns max(0, k-(n-m))..min(m, k) of row m feed into [n, k]
    row = {0: ONE}
    for m in range(1, n + 1):
        lo, hi = max(0, k - (n - m)), min(m, k)
        nxt = {}
        for j in range(lo, hi + 1):
            left = row.get(j - 1, ZERO) if j >= 1 else ZERO
            up = row.get(j, ZERO) if j <= m - 1 else ZERO
            nxt[j] = poly_add(left, poly_shift(up, j))
        row = nxt
    return row[k]
