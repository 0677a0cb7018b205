"""Exact Betti diagrams, pure diagrams and their basic invariants.

A Betti diagram is a finite table of rationals ``beta[i, j]`` where ``i`` is
the homological index (column, ``0 <= i <= n``) and ``j`` the internal
degree.  Tables are displayed with row label ``j - i``, the usual Macaulay2
convention, but stored by internal degree.

The *pure diagram* of a strictly increasing degree sequence
``d_0 < d_1 < ... < d_s`` has a single entry per column,

    pi(d)[i, d_i] = (-1)^i * prod_{j != i} 1 / (d_j - d_i),

which is always positive: the ``i`` negative factors cancel the sign.  These
diagrams solve the Herzog-Kuhl equations

    sum_{i,j} (-1)^i beta[i, j] j^m = 0      for m = 0, ..., s - 1,

and are the extremal rays of the cone of Betti diagrams of graded modules.

All arithmetic is exact: entries are :class:`fractions.Fraction`, floats are
rejected at the door.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    CodimensionExceedsAmbient,
    InvalidDegreeSequence,
    InvalidDiagram,
    NotGeneratedInDegreeZero,
    UndefinedOnZero,
)

#: Exact rational scalar used everywhere in this package.
Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce to an exact rational.  Floats are refused: they would silently
    poison exact computations downstream."""
    if isinstance(value, float):
        raise InvalidDiagram(f"float entry {value!r} not allowed; use an exact rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise InvalidDiagram(f"cannot interpret {value!r} as an exact rational")


class LaurentPolynomial:
    """Sparse Laurent polynomial in one variable with rational coefficients.

    Supports exactly what the numerator algebra needs: addition, scalar
    multiplication, multiplication by ``(1 - t)^k``, exact division by
    ``(1 - t)``, and evaluation.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Fraction] = {}
        for degree, value in items:
            v = as_rational(value)
            if v:
                acc[int(degree)] = acc.get(int(degree), Fraction(0)) + v
        self._coeffs = {d: v for d, v in acc.items() if v}

    def coefficient(self, degree: int) -> Fraction:
        return self._coeffs.get(degree, Fraction(0))

    def items(self):
        return sorted(self._coeffs.items())

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def support(self) -> tuple[int, int]:
        """(lowest, highest) degree of a nonzero term."""
        if not self._coeffs:
            raise UndefinedOnZero("zero polynomial has no support")
        return min(self._coeffs), max(self._coeffs)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self._coeffs)
        for d, v in other._coeffs.items():
            out[d] = out.get(d, Fraction(0)) + v
        return LaurentPolynomial(out)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + other.scaled(-1)

    def scaled(self, scalar) -> "LaurentPolynomial":
        c = as_rational(scalar)
        return LaurentPolynomial({d: v * c for d, v in self._coeffs.items()})

    def shifted(self, k: int) -> "LaurentPolynomial":
        """Multiply by t^k."""
        return LaurentPolynomial({d + k: v for d, v in self._coeffs.items()})

    def times_one_minus_t(self, power: int = 1) -> "LaurentPolynomial":
        out = self
        for _ in range(power):
            out = out - out.shifted(1)
        return out

    def exact_div_one_minus_t(self) -> "LaurentPolynomial":
        """Exact quotient by (1 - t); raises if the remainder is nonzero.

        Divisibility by (1 - t) is equivalent to vanishing at t = 1.
        """
        if self.is_zero:
            return self
        if self(1) != 0:
            raise ValueError("polynomial is not divisible by (1 - t)")
        lo, hi = self.support()
        out: dict[int, Fraction] = {}
        running = Fraction(0)
        for d in range(lo, hi):
            running += self.coefficient(d)
            if running:
                out[d] = running
        return LaurentPolynomial(out)

    def one_minus_t_order(self) -> int:
        """Largest s with (1 - t)^s dividing the polynomial (zero poly -> error)."""
        if self.is_zero:
            raise UndefinedOnZero("order undefined for the zero polynomial")
        s = 0
        p = self
        while not p.is_zero and p(1) == 0:
            p = p.exact_div_one_minus_t()
            s += 1
        return s

    def __call__(self, point) -> Fraction:
        x = as_rational(point)
        total = Fraction(0)
        for d, v in self._coeffs.items():
            total += v * x**d
        return total

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for d, v in self.items():
            term = f"{v}" if d == 0 else (f"{v}*t^{d}" if v != 1 else f"t^{d}")
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


class BettiDiagram:
    """Immutable sparse table beta[i, j] of exact rationals.

    ``n`` is the ambient number of variables; entries must have
    ``0 <= i <= n``.  Zero values are dropped on construction, so the stored
    support is exactly the nonzero support.  The degree window
    ``M <= j - i <= N`` is derived from the support, never stored.

    Diagrams form a vector space: they can be added, subtracted and scaled
    by exact rationals, and entries may be negative.
    """

    __slots__ = ("_n", "_entries", "_hash")

    def __init__(self, n: int, entries: Mapping[tuple[int, int], object] | Iterable = ()):
        if n < 0:
            raise InvalidDiagram("ambient variable count must be >= 0")
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[tuple[int, int], Fraction] = {}
        for (i, j), value in items:
            i, j = int(i), int(j)
            if not 0 <= i <= n:
                raise IndexError(f"homological index {i} outside [0, {n}]")
            v = as_rational(value)
            if v:
                acc[(i, j)] = acc.get((i, j), Fraction(0)) + v
        self._n = n
        self._entries = {k: v for k, v in acc.items() if v}
        self._hash = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def is_zero(self) -> bool:
        return not self._entries

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def items(self):
        return sorted(self._entries.items())

    def support(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._entries))

    def columns(self) -> tuple[int, ...]:
        """Homological indices with at least one nonzero entry."""
        return tuple(sorted({i for i, _ in self._entries}))

    def column_degrees(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(j for ii, j in self._entries if ii == i))

    def projective_dimension(self) -> int:
        if self.is_zero:
            raise UndefinedOnZero("projective dimension undefined for the zero diagram")
        return max(i for i, _ in self._entries)

    def __add__(self, other: "BettiDiagram") -> "BettiDiagram":
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        if other._n != self._n:
            raise InvalidDiagram("cannot add diagrams with different ambient n")
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, Fraction(0)) + v
        return BettiDiagram(self._n, out)

    def __sub__(self, other: "BettiDiagram") -> "BettiDiagram":
        return self + other.scaled(-1)

    def scaled(self, scalar) -> "BettiDiagram":
        c = as_rational(scalar)
        return BettiDiagram(self._n, {k: v * c for k, v in self._entries.items()})

    def __rmul__(self, scalar) -> "BettiDiagram":
        return self.scaled(scalar)

    def __eq__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return self._n == other._n and self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._entries.items())))
        return self._hash

    def __repr__(self):
        ent = ", ".join(f"({i},{j}): {v}" for (i, j), v in self.items())
        return f"BettiDiagram(n={self._n}, {{{ent}}})"


class DegreeSequence(tuple):
    """Strictly increasing tuple of integers d_0 < d_1 < ... < d_s."""

    def __new__(cls, degrees: Iterable[int]):
        vals = tuple(int(d) for d in degrees)
        if not vals:
            raise InvalidDegreeSequence("degree sequence must be nonempty")
        if any(b <= a for a, b in zip(vals, vals[1:])):
            raise InvalidDegreeSequence(f"sequence {vals} is not strictly increasing")
        return super().__new__(cls, vals)

    @property
    def codimension(self) -> int:
        return len(self) - 1


@dataclass(frozen=True)
class PureDiagram:
    """Pure diagram pi(d) in ambient dimension n.

    One nonzero entry per column 0..s, at (i, d_i); all entries positive.
    Compare with :func:`bettidecomp.poset.leq` for the partial order.
    """

    degrees: DegreeSequence
    n: int

    def __post_init__(self):
        if not isinstance(self.degrees, DegreeSequence):
            object.__setattr__(self, "degrees", DegreeSequence(self.degrees))
        if len(self.degrees) > self.n + 1:
            raise CodimensionExceedsAmbient(
                f"sequence of length {len(self.degrees)} needs n >= {len(self.degrees) - 1}, got n={self.n}"
            )

    @property
    def codimension(self) -> int:
        return self.degrees.codimension

    @cached_property
    def betti(self) -> BettiDiagram:
        d = self.degrees
        s = len(d) - 1
        entries = {}
        for i in range(s + 1):
            prod = 1
            for j in range(s + 1):
                if j != i:
                    prod *= d[j] - d[i]
            entries[(i, d[i])] = Fraction((-1) ** i, prod)
        return BettiDiagram(self.n, entries)

    def entry(self, i: int) -> Fraction:
        """The single nonzero value in column i."""
        return self.betti[(i, self.degrees[i])]

    def __repr__(self):
        return f"pi{tuple(self.degrees)}"


@dataclass(frozen=True)
class NormalizedPureDiagram:
    """Pure diagram with d_0 = 0 rescaled so the (0, 0) entry is 1.

    The scale factor is d_1 * d_2 * ... * d_s.
    """

    degrees: DegreeSequence
    n: int
    scale: int
    betti: BettiDiagram = field(compare=False)

    def __repr__(self):
        return f"normalized_pi{tuple(self.degrees)}"


def pure_diagram(degrees, n: int) -> PureDiagram:
    """Build pi(d) for a strictly increasing sequence of length <= n + 1.

    >>> pure_diagram((0, 2, 3, 5), 3).entry(0)
    Fraction(1, 30)
    >>> pure_diagram((5,), 3).entry(0)   # empty product
    Fraction(1, 1)
    """
    return PureDiagram(DegreeSequence(degrees), n)


def normalize(p: PureDiagram) -> NormalizedPureDiagram:
    """Rescale a pure diagram generated in degree zero to have entry 1 at (0, 0)."""
    if p.degrees[0] != 0:
        raise NotGeneratedInDegreeZero(f"first degree is {p.degrees[0]}, expected 0")
    scale = 1
    for d in p.degrees[1:]:
        scale *= d
    return NormalizedPureDiagram(p.degrees, p.n, scale, p.betti.scaled(scale))


def hk_residuals(b: BettiDiagram, s: int) -> list[Fraction]:
    """The first s Herzog-Kuhl residuals sum (-1)^i beta[i,j] j^m, m = 0..s-1.

    All zero exactly when the diagram lies in the codimension-s subspace.
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    out = []
    for m in range(s):
        total = Fraction(0)
        for (i, j), v in b.items():
            total += (-1) ** i * v * Fraction(j) ** m
        out.append(total)
    return out


def numerator_polynomial(b: BettiDiagram) -> LaurentPolynomial:
    """Alternating generating polynomial S(b, t) = sum (-1)^i beta[i, j] t^j.

    The Hilbert series of a module with this diagram is S(b, t) / (1 - t)^n.
    Linear in the diagram.
    """
    acc: dict[int, Fraction] = {}
    for (i, j), v in b.items():
        acc[j] = acc.get(j, Fraction(0)) + (-1) ** i * v
    return LaurentPolynomial(acc)


def codimension(b: BettiDiagram) -> int:
    """Largest s such that (1 - t)^s divides the numerator polynomial.

    Equals the number of leading Herzog-Kuhl equations the diagram satisfies.
    """
    if b.is_zero:
        raise UndefinedOnZero("codimension undefined for the zero diagram")
    return numerator_polynomial(b).one_minus_t_order()


def window_of(b: BettiDiagram) -> tuple[int, int]:
    """Degree window (M, N) = (min, max) of j - i over the nonzero support."""
    if b.is_zero:
        raise UndefinedOnZero("window undefined for the zero diagram")
    offsets = [j - i for i, j in b.support()]
    return min(offsets), max(offsets)
