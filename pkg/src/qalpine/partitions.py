"""Integer partitions and the truncated series built from them.

The enumerator here is a brute-force oracle, independent of the Gaussian
binomial machinery.  The series functions (``E``, the pentagonal product,
theta-type sums, mod-5 products) all work modulo ``x**(D + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .alpine import ExponentKind, exponent, gs1_sum, gs2_sum
from .polyring import Poly, geometric_factor, poly_mul
from .qbinom import QBinomTable


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class PartitionPredicate:
    """Constraints on a partition.  ``None`` means unconstrained.

    ``min_gap`` bounds every difference between consecutive parts from
    below; ``residue_filter=(m, allowed)`` admits only parts whose residue
    mod ``m`` lies in ``allowed``, with residue ``m`` standing for 0.
    """

    max_part: Optional[int] = None
    min_part: Optional[int] = None
    max_parts: Optional[int] = None
    min_gap: Optional[int] = None
    residue_filter: Optional[tuple[int, frozenset[int]]] = None

    def part_ok(self, p: int) -> bool:
        if self.max_part is not None and p > self.max_part:
            return False
        if self.min_part is not None and p < self.min_part:
            return False
        if self.residue_filter is not None:
            m, allowed = self.residue_filter
            r = p % m
            if r not in allowed and not (r == 0 and m in allowed):
                return False
        return True

    def __call__(self, a: Partition) -> bool:
        parts = a.parts
        if self.max_parts is not None and len(parts) > self.max_parts:
            return False
        if not all(self.part_ok(p) for p in parts):
            return False
        if self.min_gap is not None:
            if any(x - y < self.min_gap for x, y in zip(parts, parts[1:])):
                return False
        return True

    def max_weight(self) -> Optional[int]:
        """Upper bound on the weight of admissible partitions, or ``None``
        when infinitely many partitions qualify."""
        if self.max_part is None:
            return 0 if self.max_parts == 0 else None
        gap = self.min_gap or 0
        lo = max(self.min_part or 1, 1)
        if gap <= 0 and self.max_parts is None:
            return None
        total, part, count = 0, self.max_part, 0
        while part >= lo and (self.max_parts is None or count < self.max_parts):
            total += part
            count += 1
            if gap <= 0:
                continue
            part -= gap
        return total


def kangaroo(max_part: Optional[int] = None, min_part: Optional[int] = None) -> PartitionPredicate:
    """Partitions whose consecutive parts differ by at least 2."""
    return PartitionPredicate(max_part=max_part, min_part=min_part, min_gap=2)


def box(width: int, height: int) -> PartitionPredicate:
    """Partitions fitting in a box: at most ``height`` parts, each at most ``width``."""
    return PartitionPredicate(max_part=width, max_parts=height)


def _reach(cap: int, slots: Optional[int], gap: int, lo: int) -> int:
    # largest weight attainable below cap, ignoring residue constraints
    if gap <= 0:
        if slots is None:
            return 1 << 62
        return max(cap, 0) * slots
    total, part, count = 0, cap, 0
    while part >= lo and (slots is None or count < slots):
        total += part
        part -= gap
        count += 1
    return total


def _descend(w: int, cap: int, pred: PartitionPredicate, slots: Optional[int]) -> Iterator[tuple[int, ...]]:
    # partitions of w with largest part <= cap, parts ascending lexicographically
    if w == 0:
        yield ()
        return
    if slots == 0:
        return
    gap = pred.min_gap if pred.min_gap is not None else 0
    lo = max(pred.min_part or 1, 1)
    if w > _reach(cap, slots, gap, lo):
        return
    for first in range(lo, min(cap, w) + 1):
        if not pred.part_ok(first):
            continue
        rest_cap = first - max(gap, 0)
        for rest in _descend(w - first, rest_cap, pred, None if slots is None else slots - 1):
            yield (first,) + rest


def iter_partitions(pred: PartitionPredicate, max_weight: int) -> Iterator[Partition]:
    """Yield admissible partitions of weight ``<= max_weight``, ordered by
    weight and then lexicographically on the parts."""
    if max_weight < 0:
        raise ValueError("max_weight must be nonnegative")
    cap = max_weight if pred.max_part is None else pred.max_part
    for w in range(max_weight + 1):
        for parts in _descend(w, cap, pred, pred.max_parts):
            yield Partition(parts)


def enumerate_partitions(pred: PartitionPredicate, max_weight: int) -> list[Partition]:
    return list(iter_partitions(pred, max_weight))


def weight_poly(pred: PartitionPredicate, D: Optional[int] = None) -> Poly:
    """Sum of ``x**weight`` over admissible partitions.

    With ``D`` the result is a series truncated at order ``D``.  With
    ``D=None`` the exact polynomial is returned, which requires the
    predicate to admit finitely many partitions.
    """
    if D is None:
        bound = pred.max_weight()
        if bound is None:
            raise ValueError("predicate admits infinitely many partitions; give an order D")
        counts = [0] * (bound + 1)
        for a in iter_partitions(pred, bound):
            counts[a.weight] += 1
        return Poly(counts)
    counts = [0] * (D + 1)
    for a in iter_partitions(pred, D):
        counts[a.weight] += 1
    return Poly(counts, D)


def euler_E(D: int) -> Poly:
    """``prod_{i>=1} 1/(1 - x^i)`` modulo ``x**(D + 1)``."""
    if D < 0:
        raise ValueError("order must be nonnegative")
    result = Poly.const(1, D)
    for i in range(1, D + 1):
        result = poly_mul(result, geometric_factor(i, D))
    return result


def euler_product(D: int) -> Poly:
    """``prod_{i>=1} (1 - x^i)`` modulo ``x**(D + 1)``."""
    if D < 0:
        raise ValueError("order must be nonnegative")
    result = Poly.const(1, D)
    for i in range(1, D + 1):
        result = poly_mul(result, Poly.from_terms({0: 1, i: -1}, D))
    return result


def theta_series(kind: ExponentKind, D: int) -> Poly:
    """``sum_lam (-1)^lam x^e(lam)`` over all lambda with ``e(lam) <= D``."""
    if D < 0:
        raise ValueError("order must be nonnegative")
    cs = [0] * (D + 1)
    # e(lam) >= lam for every kind, so |lam| <= D covers all contributing terms
    for lam in range(-D - 1, D + 2):
        e = exponent(kind, lam)
        if e <= D:
            cs[e] += -1 if lam % 2 else 1
    return Poly(cs, D)


def mod5_product(residues, reciprocal: bool, D: int) -> Poly:
    """Product over ``e <= D`` with ``e mod 5`` in ``residues`` of either
    ``(1 - x^e)`` or ``1/(1 - x^e)``.  Residue 5 stands for multiples of 5."""
    residues = frozenset(residues)
    if not residues <= {1, 2, 3, 4, 5}:
        raise ValueError(f"residues must be drawn from 1..5, got {sorted(residues)}")
    if D < 0:
        raise ValueError("order must be nonnegative")
    result = Poly.const(1, D)
    for e in range(1, D + 1):
        r = e % 5 or 5
        if r not in residues:
            continue
        factor = geometric_factor(e, D) if reciprocal else Poly.from_terms({0: 1, e: -1}, D)
        result = poly_mul(result, factor)
    return result


class RRCheck(NamedTuple):
    equal: bool
    sum_side: Poly
    product_side: Poly


def rr_check(variant: int, D: int, table: QBinomTable | None = None) -> RRCheck:
    """Compare a GS sum at large enough n with the mod-5 product side of the
    first or second Rogers-Ramanujan identity, modulo ``x**(D + 1)``.

    ``P(n)`` agrees with its limit through degree ``n - 1``, so ``P(D + 1)``
    truncated at ``D`` equals the truncated limit; likewise for ``Q``.
    """
    if D < 0:
        raise ValueError("order must be nonnegative")
    if variant == 1:
        lhs = gs1_sum(D + 1, table).truncate(D)
        rhs = mod5_product({1, 4}, True, D)
    elif variant == 2:
        lhs = gs2_sum(D + 2, table).truncate(D)
        rhs = mod5_product({2, 3}, True, D)
    else:
        raise ValueError(f"variant must be 1 or 2, got {variant}")
    return RRCheck(lhs == rhs, lhs, rhs)
