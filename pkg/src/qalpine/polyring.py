"""Dense univariate polynomials with exact integer coefficients.

A :class:`Poly` is either an exact polynomial or a power series known
modulo ``x**(trunc + 1)``.  Mixing two different truncation orders is an
error rather than a silent loss of precision.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Optional, Sequence


class TruncationError(ValueError):
    """Raised when truncated series of different orders are combined, or a
    truncated series is used where an exact polynomial is required."""


def _strip(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _fit(coeffs: list[int], trunc: int) -> list[int]:
    coeffs = coeffs[: trunc + 1]
    coeffs.extend([0] * (trunc + 1 - len(coeffs)))
    return coeffs


class Poly:
    """Immutable polynomial ``sum(coeffs[i] * x**i)``.

    With ``trunc=None`` the coefficient list carries no trailing zeros, so
    the zero polynomial has ``coeffs == ()``.  With ``trunc=D`` the list has
    length exactly ``D + 1``.
    """

    __slots__ = ("_coeffs", "_trunc")

    def __init__(self, coeffs: Iterable[int] = (), trunc: Optional[int] = None):
        cs = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            cs.append(c)
        if trunc is None:
            cs = _strip(cs)
        else:
            if trunc < 0:
                raise ValueError("truncation order must be nonnegative")
            cs = _fit(cs, trunc)
        self._coeffs = tuple(cs)
        self._trunc = trunc

    # construction helpers

    @classmethod
    def const(cls, c: int, trunc: Optional[int] = None) -> "Poly":
        return cls([c], trunc)

    @classmethod
    def monomial(cls, k: int, c: int = 1, trunc: Optional[int] = None) -> "Poly":
        if k < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * k + [c], trunc)

    @classmethod
    def from_terms(cls, terms: dict[int, int], trunc: Optional[int] = None) -> "Poly":
        """Build from a ``{exponent: coefficient}`` mapping."""
        if not terms:
            return cls((), trunc)
        top = max(terms)
        cs = [0] * (top + 1)
        for e, c in terms.items():
            cs[e] += c
        return cls(cs, trunc)

    # accessors

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def trunc(self) -> Optional[int]:
        return self._trunc

    @property
    def degree(self) -> int:
        """Index of the highest nonzero coefficient; -1 for zero."""
        for i in range(len(self._coeffs) - 1, -1, -1):
            if self._coeffs[i]:
                return i
        return -1

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative exponent")
        if self._trunc is not None and i > self._trunc:
            raise IndexError(f"coefficient of x^{i} unknown beyond order {self._trunc}")
        return self._coeffs[i] if i < len(self._coeffs) else 0

    def truncate(self, D: int) -> "Poly":
        """Reduce modulo ``x**(D + 1)``; refuses to raise the order."""
        if self._trunc is not None and D > self._trunc:
            raise TruncationError(f"cannot extend order {self._trunc} to {D}")
        return Poly(self._coeffs, D)

    def exact(self) -> "Poly":
        """Drop the truncation marker (the caller vouches for exactness)."""
        return Poly(self._coeffs)

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_sub(other, self)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self._coeffs], self._trunc)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = Poly.const(1, self._trunc)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, t: int) -> int:
        return poly_eval_int(self, t)

    # comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Poly.const(other, self._trunc)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._trunc == other._trunc and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._coeffs, self._trunc))

    def __repr__(self) -> str:
        if self._trunc is None:
            return f"Poly({list(self._coeffs)})"
        return f"Poly({list(self._coeffs)}, trunc={self._trunc})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            s = "0"
        else:
            sign, body = terms[0]
            s = ("-" if sign == "-" else "") + body
            for sign, body in terms[1:]:
                s += f" {sign} {body}"
        if self._trunc is not None:
            s += f" + O(x^{self._trunc + 1})"
        return s


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Poly.const(value)
    return NotImplemented


def _common_trunc(a: Poly, b: Poly) -> Optional[int]:
    if a.trunc is not None and b.trunc is not None and a.trunc != b.trunc:
        raise TruncationError(f"mismatched truncation orders {a.trunc} and {b.trunc}")
    return a.trunc if a.trunc is not None else b.trunc


X = Poly([0, 1])
ZERO = Poly()
ONE = Poly([1])


def poly_add(a: Poly, b: Poly) -> Poly:
    trunc = _common_trunc(a, b)
    return Poly([u + v for u, v in zip_longest(a.coeffs, b.coeffs, fillvalue=0)], trunc)


def poly_sub(a: Poly, b: Poly) -> Poly:
    trunc = _common_trunc(a, b)
    return Poly([u - v for u, v in zip_longest(a.coeffs, b.coeffs, fillvalue=0)], trunc)


def poly_mul(a: Poly, b: Poly, trunc: Optional[int] = None) -> Poly:
    """Exact product, optionally reduced modulo ``x**(trunc + 1)``.

    The result order is the smallest of ``trunc`` and the orders the
    operands carry (which must agree with each other).
    """
    order = _common_trunc(a, b)
    if trunc is not None:
        order = trunc if order is None else min(order, trunc)
    ac, bc = a.coeffs, b.coeffs
    if not ac or not bc:
        return Poly((), order)
    size = len(ac) + len(bc) - 1
    if order is not None:
        size = min(size, order + 1)
    out = [0] * size
    for i, u in enumerate(ac):
        if not u or i >= size:
            continue
        for j in range(min(len(bc), size - i)):
            v = bc[j]
            if v:
                out[i + j] += u * v
    return Poly(out, order)


def poly_shift(a: Poly, k: int) -> Poly:
    """Multiply by ``x**k``."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    if a.trunc is None and a.is_zero():
        return a
    return Poly([0] * k + list(a.coeffs), a.trunc)


def poly_eval_int(a: Poly, t: int) -> int:
    """Exact value at the integer ``t``; truncated series are refused."""
    if a.trunc is not None:
        raise TruncationError("cannot evaluate a truncated series")
    value = 0
    for c in reversed(a.coeffs):
        value = value * t + c
    return value


def geometric_factor(i: int, D: int) -> Poly:
    """``1/(1 - x**i)`` modulo ``x**(D + 1)``."""
    if i < 1:
        raise ValueError("geometric factor needs i >= 1")
    if D < 0:
        raise ValueError("order must be nonnegative")
    cs = [0] * (D + 1)
    for e in range(0, D + 1, i):
        cs[e] = 1
    return Poly(cs, D)


def poly_sum(polys: Iterable[Poly], start: Optional[Poly] = None) -> Poly:
    total = ZERO if start is None else start
    for p in polys:
        total = poly_add(total, p)
    return total


def poly_prod(polys: Sequence[Poly] | Iterable[Poly], trunc: Optional[int] = None) -> Poly:
    result = ONE if trunc is None else Poly.const(1, trunc)
    for p in polys:
        result = poly_mul(result, p, trunc)
    return result
