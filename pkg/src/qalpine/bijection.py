"""Cancellation of the GS1 sum by the leftmatch/rightmatch rewrite rules.

A summand of ``P(n)`` is a signed term: an index ``lam`` together with a
word of length ``n`` over ``{A, B}`` containing ``floor((n + 5 lam)/2)``
letters ``B``.  Its weight is ``a(lam)`` plus the inversion count of the
word (pairs B...A), so that the words of a column generate the Gaussian
binomial.  ``rightmatch`` is applied when ``n + lam`` is even and
``leftmatch`` when it is odd; terms the rewrite leaves alone survive, the
rest pair off with opposite signs and equal weights.

Rules are tried in order, first match wins.  In a rule that recurses on
the interior, a recursive call that leaves the interior unchanged makes
the whole term a fixed point (``literal=False``, the default).  With
``literal=True`` the rules are applied with no such guard; that reading
sends surviving terms to words in no valid column.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .alpine import ExponentKind, exponent, gs1_column, gs1_sum, lambda_range
from .polyring import Poly, poly_add, poly_sub, ZERO
from .qbinom import QBinomTable

A, B = "A", "B"
StepPath = tuple[str, ...]


@dataclass(frozen=True)
class Rule:
    """``[head, body..., tail] -> prefix + call(body) + suffix``.

    ``head``/``tail`` of ``None`` leave that end of the pattern open.  A
    ``call`` of ``None`` copies the body unchanged.
    """

    head: Optional[str]
    tail: Optional[str]
    prefix: tuple[str, ...] = ()
    call: Optional[str] = None
    suffix: tuple[str, ...] = ()

    def split(self, word: StepPath) -> Optional[StepPath]:
        need = (self.head is not None) + (self.tail is not None)
        if len(word) < need:
            return None
        if self.head is not None and word[0] != self.head:
            return None
        if self.tail is not None and word[-1] != self.tail:
            return None
        lo = 1 if self.head is not None else 0
        hi = len(word) - (1 if self.tail is not None else 0)
        return word[lo:hi]


class RewriteSystem:
    """A set of mutually recursive functions, each an ordered rule list.

    A word matching no rule is returned unchanged.
    """

    def __init__(self, rules: dict[str, Sequence[Rule]]):
        self.rules = {name: tuple(rs) for name, rs in rules.items()}
        for rs in self.rules.values():
            for r in rs:
                if r.call is not None and r.call not in self.rules:
                    raise ValueError(f"rule calls unknown function {r.call!r}")

    def apply(self, name: str, word: Sequence[str], literal: bool = False) -> StepPath:
        word = tuple(word)
        for rule in self.rules[name]:
            body = rule.split(word)
            if body is None:
                continue
            if rule.call is None:
                inner = body
            else:
                inner = self.apply(rule.call, body, literal)
                if not literal and inner == body:
                    return word
            return rule.prefix + inner + rule.suffix
        return word


GS1_RULES = RewriteSystem(
    {
        "leftmatch": [
            Rule(A, None, (), "rightmatch", (B,)),
            Rule(B, A, (B,), "leftmatch", (A,)),
            Rule(B, B, (A,), None, (A,)),
        ],
        "rightmatch": [
            Rule(None, B, (A,), "leftmatch", ()),
            Rule(B, A, (B,), "rightmatch", (A,)),
            Rule(A, A, (B,), None, (B,)),
        ],
    }
)


def leftmatch(path: Sequence[str], literal: bool = False) -> StepPath:
    return GS1_RULES.apply("leftmatch", path, literal)


def rightmatch(path: Sequence[str], literal: bool = False) -> StepPath:
    return GS1_RULES.apply("rightmatch", path, literal)


def path_area(path: Sequence[str], mirrored: bool = False) -> int:
    """Inversion count: pairs ``i < j`` with ``B`` at ``i`` and ``A`` at ``j``
    (``A`` before ``B`` when ``mirrored``)."""
    first, second = (A, B) if mirrored else (B, A)
    seen = count = 0
    for t in path:
        if t == first:
            seen += 1
        elif t == second:
            count += seen
    return count


@dataclass(frozen=True)
class SignedTerm:
    n: int
    lam: int
    path: StepPath

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(self.path))
        if len(self.path) != self.n:
            raise ValueError(f"path length {len(self.path)} != n = {self.n}")
        if any(t not in (A, B) for t in self.path):
            raise ValueError(f"path has tokens outside {{A, B}}: {self.path}")
        if self.path.count(B) != gs1_column(self.n, self.lam):
            raise ValueError(f"B-count of {self.path} does not match lambda = {self.lam}")

    @property
    def sign(self) -> int:
        return -1 if self.lam % 2 else 1

    def weight(self, mirrored: bool = False) -> int:
        return exponent(ExponentKind.A_GS1, self.lam) + path_area(self.path, mirrored)

    def __str__(self) -> str:
        return f"{'+-'[self.sign < 0]}[lam={self.lam}] {''.join(self.path) or '()'}"


def _words(n: int, k: int):
    # words of length n with k letters B, in lexicographic order (A < B)
    if k == 0:
        yield (A,) * n
        return
    if k == n:
        yield (B,) * n
        return
    for rest in _words(n - 1, k):
        yield (A,) + rest
    for rest in _words(n - 1, k - 1):
        yield (B,) + rest


def enumerate_terms(n: int) -> list[SignedTerm]:
    """All summands of ``P(n)`` by ascending lambda, words lexicographic."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return [
        SignedTerm(n, lam, w)
        for lam in lambda_range(n, gs1_column)
        for w in _words(n, gs1_column(n, lam))
    ]


def signed_weight_sum(terms, mirrored: bool = False) -> Poly:
    counts: dict[int, int] = {}
    for t in terms:
        e = t.weight(mirrored)
        counts[e] = counts.get(e, 0) + t.sign
    return Poly.from_terms(counts) if counts else ZERO


class MatchingError(ValueError):
    """The rewrite produced a word in no column of the row."""


def dispatch(term: SignedTerm, literal: bool = False) -> StepPath:
    if (term.n + term.lam) % 2 == 0:
        return rightmatch(term.path, literal)
    return leftmatch(term.path, literal)


def match_term(term: SignedTerm, literal: bool = False) -> Optional[SignedTerm]:
    """The partner of ``term``, or ``None`` if the term is a fixed point."""
    image = dispatch(term, literal)
    if image == term.path:
        return None
    if len(image) != term.n:
        raise MatchingError(f"rewrite changed length: {term} -> {''.join(image)}")
    k = image.count(B)
    for lam in lambda_range(term.n, gs1_column):
        if gs1_column(term.n, lam) == k:
            return SignedTerm(term.n, lam, image)
    raise MatchingError(f"{term} rewrites to {''.join(image)} with {k} B's, which is no column of row {term.n}")


@dataclass
class MatchReport:
    n: int
    pairs: list[tuple[SignedTerm, SignedTerm]] = field(default_factory=list)
    fixed: list[SignedTerm] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    lambda_shifts: list[int] = field(default_factory=list)
    total_terms: int = 0

    @property
    def pair_count(self) -> int:
        return len(self.pairs)

    @property
    def fixed_count(self) -> int:
        return len(self.fixed)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fixed_weight_sum(self, mirrored: bool = False) -> Poly:
        return signed_weight_sum(self.fixed, mirrored)


def verify_matching(
    n: int,
    mirrored: bool = False,
    literal: bool = False,
    table: QBinomTable | None = None,
) -> MatchReport:
    """Match every term of row ``n`` and check the cancellation properties:
    involution, sign reversal, weight preservation, and that the fixed
    terms add up to ``P(n)``."""
    terms = enumerate_terms(n)
    report = MatchReport(n, total_terms=len(terms))
    order = {t: i for i, t in enumerate(terms)}
    shifts = set()
    seen = set()
    for t in terms:
        try:
            partner = match_term(t, literal)
        except MatchingError as exc:
            report.violations.append(f"structural: {exc}")
            continue
        if partner is None:
            report.fixed.append(t)
            continue
        if partner not in order:
            report.violations.append(f"structural: {t} maps outside the term set")
            continue
        try:
            back = match_term(partner, literal)
        except MatchingError as exc:
            report.violations.append(f"involution: {exc}")
            continue
        if back != t:
            report.violations.append(f"involution: {t} -> {partner} -> {back}")
            continue
        if partner.sign == t.sign:
            report.violations.append(f"sign: {t} and {partner} have the same sign")
        if partner.weight(mirrored) != t.weight(mirrored):
            report.violations.append(
                f"weight: {t} has weight {t.weight(mirrored)}, {partner} has {partner.weight(mirrored)}"
            )
        shifts.add(partner.lam - t.lam)
        if t not in seen:
            seen.update((t, partner))
            first, second = sorted((t, partner), key=order.__getitem__)
            report.pairs.append((first, second))
    report.pairs.sort(key=lambda pr: order[pr[0]])
    report.lambda_shifts = sorted(shifts)
    if report.ok and report.fixed_weight_sum(mirrored) != gs1_sum(n, table):
        report.violations.append("completeness: fixed terms do not sum to P(n)")
    return report
