"""The slalom and giant-slalom (GS1, GS2) identities.

Each identity is built two ways: as an explicit alternating sum of
(Gaussian) binomial coefficients over lambda, and from its recurrence and
base cases alone.  :func:`verify_identity` compares the two.

The sums range over every lambda whose binomial column lies in ``[0, n]``;
all other summands vanish.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Union

from .polyring import ONE, ZERO, Poly, poly_add, poly_eval_int, poly_shift, poly_sub
from .qbinom import QBinomTable, binomial, gaussian_binomial


class ExponentKind(enum.Enum):
    A_GS1 = "a"
    B_GS2 = "b"
    C_SLALOM = "c"


def exponent(kind: ExponentKind, lam: int) -> int:
    if kind is ExponentKind.A_GS1:
        return (5 * lam * lam - lam) // 2
    if kind is ExponentKind.B_GS2:
        return (5 * lam * lam - 3 * lam) // 2
    if kind is ExponentKind.C_SLALOM:
        return (3 * lam * lam - lam) // 2
    raise ValueError(f"unknown exponent kind {kind!r}")


# column of the lambda-th summand in row n, per identity
def gs1_column(n: int, lam: int) -> int:
    return (n + 5 * lam) // 2


def gs2_column(n: int, lam: int) -> int:
    return (n - 1 + 5 * lam) // 2


def slalom_column(n: int, lam: int) -> int:
    return (n + 3 * lam) // 2


IDENTITIES = {
    "gs1": (ExponentKind.A_GS1, gs1_column),
    "gs2": (ExponentKind.B_GS2, gs2_column),
    "slalom": (ExponentKind.C_SLALOM, slalom_column),
}


def lambda_range(n: int, column: Callable[[int, int], int]) -> list[int]:
    """All lambda with ``0 <= column(n, lambda) <= n``, ascending."""
    # every column function grows by at least 1 per unit of lambda
    return [lam for lam in range(-abs(n) - 2, abs(n) + 3) if 0 <= column(n, lam) <= n]


def _pro_sum(identity: str, n: int, table: QBinomTable | None) -> Poly:
    kind, column = IDENTITIES[identity]
    total = ZERO
    for lam in lambda_range(n, column):
        term = poly_shift(gaussian_binomial(table, n, column(n, lam)), exponent(kind, lam))
        total = poly_sub(total, term) if lam % 2 else poly_add(total, term)
    return total


def gs1_sum(n: int, table: QBinomTable | None = None) -> Poly:
    """``P(n) = sum (-1)^lam x^a(lam) [n, floor((n + 5 lam)/2)]``."""
    if n < -1:
        raise ValueError(f"gs1_sum is defined for n >= -1, got {n}")
    if n == -1:
        return ZERO
    return _pro_sum("gs1", n, table)


def gs2_sum(n: int, table: QBinomTable | None = None) -> Poly:
    """``Q(n) = sum (-1)^lam x^b(lam) [n, floor((n - 1 + 5 lam)/2)]``."""
    if n < 0:
        raise ValueError(f"gs2_sum is defined for n >= 0, got {n}")
    return _pro_sum("gs2", n, table)


def slalom_sum(n: int, table: QBinomTable | None = None) -> Poly:
    """``R(n) = sum (-1)^lam x^c(lam) [n, floor((n + 3 lam)/2)]``."""
    if n < 0:
        raise ValueError(f"slalom_sum is defined for n >= 0, got {n}")
    return _pro_sum("slalom", n, table)


def _two_term(n: int, first: int, a: Poly, b: Poly) -> Poly:
    # runs S(m) = S(m-1) + x^(m-1) S(m-2) forward from S(first-1)=a, S(first)=b
    prev, cur = a, b
    for m in range(first + 1, n + 1):
        prev, cur = cur, poly_add(cur, poly_shift(prev, m - 1))
    return cur if n >= first else prev


def gs1_rec(n: int) -> Poly:
    """P(n) from ``P(n) = P(n-1) + x^(n-1) P(n-2)``, ``P(-1)=0``, ``P(0)=1``."""
    if n < -1:
        raise ValueError(f"gs1_rec is defined for n >= -1, got {n}")
    return _two_term(n, 0, ZERO, ONE)


def gs2_rec(n: int) -> Poly:
    """Q(n) from ``Q(n) = Q(n-1) + x^(n-1) Q(n-2)``, ``Q(0)=0``, ``Q(1)=1``."""
    if n < 0:
        raise ValueError(f"gs2_rec is defined for n >= 0, got {n}")
    return _two_term(n, 1, ZERO, ONE)


def slalom_rec(n: int) -> Poly:
    if n < 0:
        raise ValueError(f"slalom_rec is defined for n >= 0, got {n}")
    # R(0) = 1 and R(n) = R(n-1)
    return ONE


_AMATEUR = {"p": "gs1", "q": "gs2", "r": "slalom"}


def amateur_sum(kind: str, n: int) -> int:
    """The integer alternating binomial sum of the amateur identity ``kind``.

    Computed from ordinary binomials, independently of the Gaussian ones.
    """
    if kind not in _AMATEUR:
        raise ValueError(f"amateur kind must be one of p, q, r; got {kind!r}")
    base = -1 if kind == "p" else 0
    if n < base:
        raise ValueError(f"amateur sum {kind} needs n >= {base}, got {n}")
    if n < 0:
        return 0
    _, column = IDENTITIES[_AMATEUR[kind]]
    return sum((-1) ** (lam % 2) * binomial(n, column(n, lam)) for lam in lambda_range(n, column))


def amateur_rec(kind: str, n: int) -> int:
    """The amateur sequence from its recurrence: Fibonacci for p and q,
    constant 1 for r."""
    if kind == "r":
        return 1
    if kind == "p":
        prev, cur, start = 0, 1, 0  # p(-1), p(0)
    elif kind == "q":
        prev, cur, start = 0, 1, 1  # q(0), q(1)
    else:
        raise ValueError(f"amateur kind must be one of p, q, r; got {kind!r}")
    if n < start - 1:
        raise ValueError(f"amateur sequence {kind} starts at n = {start - 1}")
    if n == start - 1:
        return prev
    for _ in range(start, n):
        prev, cur = cur, prev + cur
    return cur


Value = Union[Poly, int]


@dataclass(frozen=True)
class IdentityRow:
    n: int
    sum_value: Value
    recurrence_value: Value
    equal: bool


@dataclass(frozen=True)
class IdentityReport:
    kind: str
    max_n: int
    per_n: list[IdentityRow] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(row.equal for row in self.per_n)

    def first_failure(self) -> IdentityRow | None:
        return next((row for row in self.per_n if not row.equal), None)


IDENTITY_KINDS = ("gs1", "gs2", "slalom", "amateur-p", "amateur-q", "amateur-r")


def _pair_for(kind: str, table: QBinomTable | None):
    if kind == "gs1":
        return lambda n: gs1_sum(n, table), gs1_rec
    if kind == "gs2":
        return lambda n: gs2_sum(n, table), gs2_rec
    if kind == "slalom":
        return lambda n: slalom_sum(n, table), slalom_rec
    if kind.startswith("amateur-") and kind[-1] in _AMATEUR:
        letter = kind[-1]
        return (lambda n: amateur_sum(letter, n)), (lambda n: amateur_rec(letter, n))
    raise ValueError(f"unknown identity {kind!r}; expected one of {', '.join(IDENTITY_KINDS)}")


def verify_identity(kind: str, max_n: int, table: QBinomTable | None = None) -> IdentityReport:
    """Compare the summation form of ``kind`` against its recurrence for
    ``0 <= n <= max_n``."""
    if max_n < 0:
        raise ValueError(f"max_n must be nonnegative, got {max_n}")
    by_sum, by_rec = _pair_for(kind, table)
    rows = []
    for n in range(max_n + 1):
        s, r = by_sum(n), by_rec(n)
        rows.append(IdentityRow(n, s, r, s == r))
    return IdentityReport(kind, max_n, rows)


def specializes(n: int, table: QBinomTable | None = None) -> bool:
    """True when each pro sum at x=1 equals its amateur counterpart at row n."""
    return (
        poly_eval_int(gs1_sum(n, table), 1) == amateur_sum("p", n)
        and poly_eval_int(gs2_sum(n, table), 1) == amateur_sum("q", n)
        and poly_eval_int(slalom_sum(n, table), 1) == amateur_sum("r", n)
    )


def signed_cells(identity: str, n: int) -> list[tuple[int, int, int]]:
    """The highlighted cells of row ``n`` as ``(lam, column, sign)``."""
    _, column = IDENTITIES[identity]
    return [(lam, column(n, lam), -1 if lam % 2 else 1) for lam in lambda_range(n, column)]
