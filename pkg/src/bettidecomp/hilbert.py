"""Hilbert series, multiplicity, and the shift bounds.

The Hilbert series of a module with Betti diagram ``b`` over n variables is

    H(t) = S(b, t) / (1 - t)^n,        S(b, t) = sum (-1)^i beta[i, j] t^j.

Writing S = (1 - t)^s Q with s maximal (s is the codimension), the
multiplicity is the exact value e = Q(1); no interpolation is involved.

For a module generated in degree 0 with minimal shifts m_1 < ... < m_r and
maximal shifts M_1 < ... < M_s (r the projective dimension, s the
codimension), the Hilbert series is squeezed coefficientwise between the
series of the normalized pure diagrams of the two shift sequences,

    beta_0 * H(pi(0, m_1..m_r)-normalized)  <=  H  <=  beta_0 * H(pi(0, M_1..M_s)-normalized),

and in particular e <= beta_0 * M_1 ... M_s / s!, with equality exactly for
Cohen-Macaulay modules with a pure resolution.  Series comparisons here are
truncated at a user-chosen depth; nothing beyond the truncation is claimed.

The Hilbert series is strictly increasing along chains of normalized pure
diagrams generated in degree zero, which is what makes the squeeze work;
``check_monotonicity`` verifies that on explicit chains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    BettiDiagram,
    LaurentPolynomial,
    NormalizedPureDiagram,
    codimension,
    normalize,
    numerator_polynomial,
    pure_diagram,
    window_of,
)
from .errors import (
    InvalidDiagram,
    NotAChain,
    NotSingleDegreeGenerated,
    UndefinedOnZero,
)
from .poset import leq


@dataclass(frozen=True)
class HilbertSeries:
    """Rational function numerator / (1 - t)^n with exact coefficients."""

    numerator: LaurentPolynomial
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise InvalidDiagram("denominator exponent must be >= 0")

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def reduced(self) -> "HilbertSeries":
        """Cancel all common (1 - t) factors between numerator and denominator."""
        num, n = self.numerator, self.n
        while n > 0 and not num.is_zero and num(1) == 0:
            num = num.exact_div_one_minus_t()
            n -= 1
        return HilbertSeries(num, n)

    def expand(self, depth: int) -> list[Fraction]:
        """Power-series coefficients of t^0 .. t^depth."""
        if depth < 0:
            raise ValueError("depth must be >= 0")
        out = []
        items = self.numerator.items()
        for k in range(depth + 1):
            total = Fraction(0)
            for j, v in items:
                if j > k:
                    break
                if self.n >= 1:
                    total += v * math.comb(k - j + self.n - 1, self.n - 1)
                elif j == k:
                    total += v
            out.append(total)
        return out

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        if self.n == other.n:
            return HilbertSeries(self.numerator + other.numerator, self.n)
        hi = max(self.n, other.n)
        a = self.numerator.times_one_minus_t(hi - self.n)
        b = other.numerator.times_one_minus_t(hi - other.n)
        return HilbertSeries(a + b, hi)

    def scaled(self, scalar) -> "HilbertSeries":
        return HilbertSeries(self.numerator.scaled(scalar), self.n)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        hi = max(self.n, other.n)
        return self.numerator.times_one_minus_t(hi - self.n) == other.numerator.times_one_minus_t(
            hi - other.n
        )

    def __hash__(self):
        r = self.reduced()
        return hash((r.numerator, r.n))


def hilbert_series(b: BettiDiagram) -> HilbertSeries:
    """Series recovered from the alternating column sums of the diagram."""
    return HilbertSeries(numerator_polynomial(b), b.n)


def expand_series(h: HilbertSeries, depth: int) -> list[Fraction]:
    """Coefficients h_0 .. h_depth of the power-series expansion at 0."""
    return h.expand(depth)


def multiplicity(b: BettiDiagram) -> Fraction:
    """e = Q(1) where S(b, t) = (1 - t)^s Q(t) with s maximal.

    For the diagram of a module this is the usual multiplicity; positive
    whenever the diagram is a positive combination of pure diagrams.
    """
    if b.is_zero:
        raise UndefinedOnZero("multiplicity undefined for the zero diagram")
    q = numerator_polynomial(b)
    while not q.is_zero and q(1) == 0:
        q = q.exact_div_one_minus_t()
    return q(1)


@dataclass(frozen=True)
class ShiftBounds:
    """Minimal shifts m_1..m_r and maximal shifts M_1..M_s of a diagram."""

    minimal: tuple[int, ...]
    maximal: tuple[int, ...]


def shift_bounds(b: BettiDiagram) -> ShiftBounds:
    """Read the per-column extreme degrees of a degree-zero-generated diagram.

    ``minimal[i-1] = min{j : beta[i, j] != 0}`` for i = 1..r (projective
    dimension) and ``maximal[i-1] = max{j : ...}`` for i = 1..s
    (codimension).  Generators must sit in degree 0 exactly; diagrams
    generated in several degrees, or in a single nonzero degree, are
    rejected rather than silently twisted.
    """
    if b.is_zero:
        raise UndefinedOnZero("shift bounds undefined for the zero diagram")
    gen_degrees = b.column_degrees(0)
    if len(gen_degrees) != 1:
        raise NotSingleDegreeGenerated(
            f"generators sit in degrees {gen_degrees}, expected a single degree"
        )
    if gen_degrees[0] != 0:
        raise NotSingleDegreeGenerated(
            f"generators sit in degree {gen_degrees[0]}, expected degree 0"
        )
    r = b.projective_dimension()
    s = codimension(b)
    minimal = []
    maximal = []
    for i in range(1, r + 1):
        col = b.column_degrees(i)
        if not col:
            raise InvalidDiagram(f"column {i} is empty below the projective dimension {r}")
        minimal.append(col[0])
        if i <= s:
            maximal.append(col[-1])
    return ShiftBounds(tuple(minimal), tuple(maximal))


@dataclass(frozen=True)
class PairMonotonicity:
    lower: tuple[int, ...]
    upper: tuple[int, ...]
    nonnegative: bool
    strict: bool
    first_violation: int | None


@dataclass(frozen=True)
class MonotonicityReport:
    depth: int
    pairs: tuple[PairMonotonicity, ...]

    @property
    def passed(self) -> bool:
        return all(p.nonnegative and p.strict for p in self.pairs)


def check_monotonicity(chain, depth: int) -> MonotonicityReport:
    """Truncated coefficientwise comparison of consecutive normalized series.

    ``chain`` is a weakly increasing sequence of normalized pure diagrams in
    one ambient dimension.  Each consecutive pair must have a series
    difference that is componentwise >= 0 up to ``depth`` and not
    identically zero; an identical pair is reported as non-strict rather
    than rejected.
    """
    chain = list(chain)
    if not chain:
        raise NotAChain("empty chain")
    n = chain[0].n
    for p in chain:
        if not isinstance(p, NormalizedPureDiagram):
            raise NotAChain(f"{p!r} is not a normalized pure diagram")
        if p.n != n:
            raise NotAChain("chain elements live in different ambient dimensions")
    pairs = []
    for a, b in zip(chain, chain[1:]):
        pa, pb = pure_diagram(a.degrees, n), pure_diagram(b.degrees, n)
        if not leq(pa, pb):
            raise NotAChain(f"{a!r} and {b!r} are not comparable in order")
        ha = HilbertSeries(numerator_polynomial(a.betti), n).expand(depth)
        hb = HilbertSeries(numerator_polynomial(b.betti), n).expand(depth)
        diff = [x - y for x, y in zip(hb, ha)]
        bad = next((k for k, v in enumerate(diff) if v < 0), None)
        pairs.append(
            PairMonotonicity(
                tuple(a.degrees),
                tuple(b.degrees),
                bad is None,
                any(v > 0 for v in diff),
                bad,
            )
        )
    return MonotonicityReport(depth, tuple(pairs))


@dataclass(frozen=True)
class BoundsReport:
    """Verdicts of the shift-bound comparisons for one diagram."""

    applicable: bool
    reason: str | None
    depth: int
    generator_count: Fraction | None = None
    shifts: ShiftBounds | None = None
    lower_ok: bool | None = None
    upper_ok: bool | None = None
    lower_slack: tuple[Fraction, ...] | None = None
    upper_slack: tuple[Fraction, ...] | None = None
    lower_equality: bool | None = None
    upper_equality: bool | None = None
    multiplicity_value: Fraction | None = None
    multiplicity_bound: Fraction | None = None
    multiplicity_ok: bool | None = None
    multiplicity_equality: bool | None = None
    is_pure: bool | None = None

    @property
    def passed(self) -> bool:
        return bool(self.applicable and self.lower_ok and self.upper_ok and self.multiplicity_ok)


def _is_pure(b: BettiDiagram) -> bool:
    degs = []
    for i in b.columns():
        col = b.column_degrees(i)
        if len(col) != 1:
            return False
        degs.append(col[0])
    return b.columns() == tuple(range(len(degs))) and all(
        x < y for x, y in zip(degs, degs[1:])
    )


def multiplicity_bounds(b: BettiDiagram, depth: int | None = None) -> BoundsReport:
    """Check the series squeeze and the multiplicity inequality.

    Truncation depth defaults to N + n + 10 where (M, N) is the support
    window.  When the shift sequences fail to be strictly increasing the
    report comes back ``applicable=False`` with a reason instead of a
    verdict.  Slack vectors are exact coefficient differences.
    """
    sb = shift_bounds(b)
    if depth is None:
        _, N = window_of(b)
        depth = N + b.n + 10
    beta0 = b[(0, 0)]
    for name, seq in (("minimal", sb.minimal), ("maximal", sb.maximal)):
        full = (0,) + seq
        if any(y <= x for x, y in zip(full, full[1:])):
            return BoundsReport(
                False,
                f"{name} shifts {seq} are not strictly increasing above 0",
                depth,
                generator_count=beta0,
                shifts=sb,
            )
    s = len(sb.maximal)
    low = normalize(pure_diagram((0,) + sb.minimal, b.n))
    high = normalize(pure_diagram((0,) + sb.maximal, b.n))
    h = hilbert_series(b).expand(depth)
    h_low = HilbertSeries(numerator_polynomial(low.betti), b.n).expand(depth)
    h_high = HilbertSeries(numerator_polynomial(high.betti), b.n).expand(depth)
    lower_slack = tuple(x - beta0 * y for x, y in zip(h, h_low))
    upper_slack = tuple(beta0 * y - x for x, y in zip(h, h_high))
    e = multiplicity(b)
    bound = beta0 * Fraction(math.prod(sb.maximal), math.factorial(s))
    return BoundsReport(
        True,
        None,
        depth,
        generator_count=beta0,
        shifts=sb,
        lower_ok=all(v >= 0 for v in lower_slack),
        upper_ok=all(v >= 0 for v in upper_slack),
        lower_slack=lower_slack,
        upper_slack=upper_slack,
        lower_equality=not any(lower_slack),
        upper_equality=not any(upper_slack),
        multiplicity_value=e,
        multiplicity_bound=bound,
        multiplicity_ok=e <= bound,
        multiplicity_equality=e == bound,
        is_pure=_is_pure(b),
    )
