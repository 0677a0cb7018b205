"""Integer dual functionals of chain bases, facets of the fan, membership.

For a maximal chain of pure diagrams and a consecutive triple
``pi0 < pi1 < pi2`` in it, there is an integer linear functional on diagrams
that evaluates to 1 on ``pi1`` and to 0 on every pure diagram below ``pi0``
or above ``pi2``.  Expanding a diagram of the window subspace in the chain
basis, the functional reads off the coefficient of ``pi1``.

Writing ``pi1 = pi(d_0, ..., d_m)``, the functional depends on how ``pi1``
differs from its neighbours.  With column sums truncated at the degrees of
``pi0`` (columns above the codimension of ``pi0`` truncate at the window
ceiling ``N + i``), the four generic shapes are

    raise in k above, drop below:   sum (-1)^i prod_{j != k} (d_j - deg) * beta[i, deg]
    drop above, raise in k below:   sum (-1)^i (d_k - d_m) prod_{j < m, j != k} (d_j - deg) * beta[i, deg]
    raise in k above, raise in l:   sum (-1)^i (d_l - d_k) prod_{j not in {k, l}} (d_j - deg) * beta[i, deg]
    drop on both sides:             sum (-1)^i prod_{j < m} (d_j - deg) * beta[i, deg]

Vanishing below ``pi0`` follows from the Herzog-Kuhl equations, vanishing
above ``pi2`` from the truncation.  Degenerate configurations (extremal
``pi1``, two moves in one column, a last-column raise to the ceiling
followed by a drop) collapse to a single scaled Betti number.

Every coefficient is an integer, so integer diagrams expand with integer
coordinates.  The boundary facets of the simplicial fan spanned by the
chains are the triples with a unique completion; their functionals are
nonnegative on the whole fan (convexity), which turns cone membership into
a finite list of inequalities with an explicit violation certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache

from .core import (
    BettiDiagram,
    PureDiagram,
    codimension,
    hk_residuals,
    pure_diagram,
    window_of,
)
from .errors import (
    ChainNotMaximal,
    NotACoverTriple,
    NotInSubspace,
    WindowMismatch,
)
from .poset import Chain, Window, chain_length, covers, maximal_chains
from .poset import _moves as _cover_moves


class FacetKind(Enum):
    """Configurations of a maximal chain with one element removed."""

    INTERIOR = "interior"
    EXTREMAL = "kind_i_extremal"
    SAME_COLUMN_TWICE = "kind_ii_same_column_twice"
    ADJACENT_COLUMNS = "kind_iii_adjacent_columns"
    CODIMENSION_TWICE = "kind_iv_codim_twice"


class FunctionalCase(Enum):
    """Which of the coefficient formulas produced a functional.

    ``ENTRY`` marks the degenerate configurations where the functional is a
    single scaled Betti number.
    """

    FIRST = "first"
    SECOND = "second"
    THIRD = "third"
    FOURTH = "fourth"
    ENTRY = "entry"


@dataclass(frozen=True)
class Functional:
    """Integer linear functional beta -> sum c[i, j] * beta[i, j] on a window."""

    window: Window
    coefficients: tuple[tuple[tuple[int, int], int], ...]
    case: FunctionalCase
    anchor: tuple[PureDiagram | None, PureDiagram, PureDiagram | None]

    @cached_property
    def _lookup(self) -> dict[tuple[int, int], int]:
        return dict(self.coefficients)

    def coefficient(self, i: int, j: int) -> int:
        return self._lookup.get((i, j), 0)

    def grid(self) -> list[list[int]]:
        """Dense display grid, row = j - i - M, column = i."""
        w = self.window
        return [
            [self._lookup.get((i, w.M + i + r), 0) for i in range(w.n + 1)]
            for r in range(w.rows)
        ]

    def __call__(self, b: BettiDiagram) -> Fraction:
        total = Fraction(0)
        for (i, j), v in b.items():
            c = self._lookup.get((i, j))
            if c:
                total += c * v
        return total


def evaluate(f: Functional, b: BettiDiagram) -> Fraction:
    """Pair a functional with a diagram; exact, integer on integer diagrams."""
    return f(b)


def _step(down: PureDiagram, up: PureDiagram, w: Window):
    """Classify the cover move down -> up as ("raise", col) or ("drop", None)."""
    a, b = tuple(down.degrees), tuple(up.degrees)
    if len(b) == len(a):
        diffs = [i for i in range(len(a)) if a[i] != b[i]]
        if len(diffs) == 1 and b[diffs[0]] == a[diffs[0]] + 1:
            return "raise", diffs[0]
    elif len(b) == len(a) - 1 and b == a[:-1] and a[-1] == w.N + len(a) - 1:
        return "drop", None
    raise NotACoverTriple(f"{down!r} -> {up!r} is not a cover move in {w}")


def _truncation_limits(p0: PureDiagram, w: Window) -> list[int]:
    """Per-column upper degree limits d_i(pi0); N + i above the codimension."""
    c = p0.codimension
    return [p0.degrees[i] if i <= c else w.N + i for i in range(w.n + 1)]


def _indicator(p1: PureDiagram, pos: tuple[int, int], w: Window, anchor):
    value = p1.betti[pos]
    scale = Fraction(1) / value
    assert scale.denominator == 1 and scale > 0
    return Functional(w, ((pos, int(scale)),), FunctionalCase.ENTRY, anchor)


def _from_formula(case, p1, prefactor, product_indices, limits, w, anchor):
    d = p1.degrees
    coeffs = []
    for i in range(w.n + 1):
        hi = min(limits[i], w.N + i)
        for deg in range(w.M + i, hi + 1):
            value = prefactor
            for j in product_indices:
                value *= d[j] - deg
            value *= (-1) ** i
            if value:
                coeffs.append(((i, deg), value))
    f = Functional(w, tuple(sorted(coeffs)), case, anchor)
    assert f(p1.betti) == 1
    return f


def coefficient_functional(
    p0: PureDiagram | None,
    p1: PureDiagram | None,
    p2: PureDiagram | None,
    w: Window,
) -> Functional:
    """Dual functional of p1 for chain bases through p0 < p1 < p2.

    ``p0 = None`` / ``p2 = None`` are the sentinels below the window minimum
    and above the window maximum; they are only legal when p1 actually is
    that extreme.  Raises ``NotACoverTriple`` otherwise.
    """
    if p1 is None:
        raise NotACoverTriple("middle element of the triple must be a pure diagram")
    if not w.contains(p1):
        raise WindowMismatch(f"{p1!r} is not a valid diagram of {w}")
    anchor = (p0, p1, p2)
    m = p1.codimension
    d = p1.degrees

    if p0 is None:
        if p1 != w.min_element():
            raise NotACoverTriple("bottom sentinel is only valid below the window minimum")
        if p2 is None:
            if p1 != w.max_element():
                raise NotACoverTriple("top sentinel is only valid above the window maximum")
            return _indicator(p1, (0, d[0]), w, anchor)
        if not w.contains(p2):
            raise WindowMismatch(f"{p2!r} is not a valid diagram of {w}")
        kind, col = _step(p1, p2, w)
        pos = (col, d[col]) if kind == "raise" else (m, d[m])
        return _indicator(p1, pos, w, anchor)

    if not w.contains(p0):
        raise WindowMismatch(f"{p0!r} is not a valid diagram of {w}")

    if p2 is None:
        if p1 != w.max_element():
            raise NotACoverTriple("top sentinel is only valid above the window maximum")
        kind, col = _step(p0, p1, w)
        if kind == "raise":
            # a raise into the maximum is only possible in column 0
            return _indicator(p1, (0, d[0]), w, anchor)
        return _from_formula(
            FunctionalCase.FOURTH, p1, 1, range(m), _truncation_limits(p0, w), w, anchor
        )

    if not w.contains(p2):
        raise WindowMismatch(f"{p2!r} is not a valid diagram of {w}")

    down_kind, down_col = _step(p0, p1, w)
    up_kind, up_col = _step(p1, p2, w)
    limits = _truncation_limits(p0, w)

    if down_kind == "raise" and up_kind == "raise":
        if down_col == up_col:
            return _indicator(p1, (up_col, d[up_col]), w, anchor)
        k, l = up_col, down_col
        product = [j for j in range(m + 1) if j not in (k, l)]
        return _from_formula(FunctionalCase.THIRD, p1, d[l] - d[k], product, limits, w, anchor)
    if down_kind == "raise" and up_kind == "drop":
        k = down_col
        if k == m:
            return _indicator(p1, (m, d[m]), w, anchor)
        product = [j for j in range(m) if j != k]
        return _from_formula(FunctionalCase.SECOND, p1, d[k] - d[m], product, limits, w, anchor)
    if down_kind == "drop" and up_kind == "raise":
        k = up_col
        product = [j for j in range(m + 1) if j != k]
        return _from_formula(FunctionalCase.FIRST, p1, 1, product, limits, w, anchor)
    return _from_formula(FunctionalCase.FOURTH, p1, 1, range(m), limits, w, anchor)


def _vacated_positions(c: Chain) -> list[tuple[int, int]]:
    """For element k of a maximal chain, an (i, j) where it is nonzero and
    all later elements vanish.  Drives the triangular back-substitution."""
    w = c.window
    seqs = c.degree_sequences()
    out = []
    for k in range(len(seqs) - 1):
        a, b = seqs[k], seqs[k + 1]
        if len(b) == len(a):
            i = next(i for i in range(len(a)) if a[i] != b[i])
        else:
            i = len(a) - 1
        out.append((i, a[i]))
    out.append((0, w.N))  # the maximum's column-0 entry
    return out


def expand_in_chain(b: BettiDiagram, c: Chain) -> list[Fraction]:
    """Coordinates of a diagram in the basis given by a maximal chain.

    The diagram must be supported inside the window and satisfy its
    ``s_min`` Herzog-Kuhl equations; coordinates may be negative.  Computed
    by triangular back-substitution along the vacating order of the chain;
    :func:`coefficient_functional` provides an independent route for
    cross-checking.
    """
    w = c.window
    if not c.is_maximal():
        raise ChainNotMaximal("expansion needs a maximal chain (a basis)")
    if b.n != w.n:
        raise WindowMismatch(f"diagram has n={b.n}, window has n={w.n}")
    for i, j in b.support():
        if not w.M <= j - i <= w.N:
            raise WindowMismatch(f"entry at ({i}, {j}) lies outside rows [{w.M}, {w.N}]")
    residuals = hk_residuals(b, w.s_min)
    if any(residuals):
        raise NotInSubspace(
            f"diagram violates the first {w.s_min} Herzog-Kuhl equations", residuals
        )
    coords = []
    residual = b
    for element, pos in zip(c.elements, _vacated_positions(c)):
        lam = residual[pos] / element.betti[pos]
        coords.append(lam)
        if lam:
            residual = residual - element.betti.scaled(lam)
    if not residual.is_zero:
        raise NotInSubspace("diagram is not in the span of the chain", residuals)
    return coords


def _middles(a: PureDiagram, c: PureDiagram, w: Window) -> list[PureDiagram]:
    """Elements x with a covered-by x covered-by c."""
    target = tuple(c.degrees)
    out = []
    for nd, _ in _cover_moves(tuple(a.degrees), w):
        if target in {seq for seq, _ in _cover_moves(nd, w)}:
            out.append(pure_diagram(nd, w.n))
    return out


def classify_facet(c: Chain) -> FacetKind:
    """Classify a maximal chain with one element removed.

    Interior exactly when the missing element can be chosen in two or more
    ways.  The boundary configurations are: the removed element was extremal
    (kind i); the neighbours differ by two steps in one single column,
    including a last-column raise to the ceiling followed by the drop of
    that column (kind ii); two raises in adjacent columns crossing
    consecutive degrees (kind iii); a double codimension drop (kind iv).
    """
    w = c.window
    if len(c) != chain_length(w) - 1:
        raise ChainNotMaximal("expected a maximal chain minus exactly one element")
    if c[0] != w.min_element():
        return FacetKind.EXTREMAL
    if c[-1] != w.max_element():
        return FacetKind.EXTREMAL
    gaps = [
        k
        for k in range(len(c) - 1)
        if not covers(c[k], c[k + 1], w)
    ]
    if len(gaps) != 1:
        raise ChainNotMaximal("chain does not have exactly one removed element")
    a, b = c[gaps[0]], c[gaps[0] + 1]
    middles = _middles(a, b, w)
    if len(middles) >= 2:
        return FacetKind.INTERIOR
    if not middles:
        raise ChainNotMaximal(f"no element fits between {a!r} and {b!r}")
    kind = _is_boundary_triple(a, middles[0], b, w)
    assert kind is not FacetKind.INTERIOR
    return kind


@dataclass(frozen=True)
class BoundaryFacet:
    """A boundary facet of the fan: a maximal chain minus one element."""

    remaining: Chain
    removed: PureDiagram
    kind: FacetKind
    functional: Functional


def _is_boundary_triple(a, mid, b, w) -> FacetKind:
    """Fast combinatorial classification of the triple around a removed element."""
    down_kind, down_col = _step(a, mid, w)
    up_kind, up_col = _step(mid, b, w)
    if down_kind == "raise" and up_kind == "raise":
        if down_col == up_col:
            return FacetKind.SAME_COLUMN_TWICE
        if down_col == up_col + 1 and a.degrees[up_col] + 1 == a.degrees[up_col + 1]:
            return FacetKind.ADJACENT_COLUMNS
        return FacetKind.INTERIOR
    if down_kind == "raise" and up_kind == "drop":
        if down_col == mid.codimension:
            return FacetKind.SAME_COLUMN_TWICE
        return FacetKind.INTERIOR
    if down_kind == "drop" and up_kind == "raise":
        return FacetKind.INTERIOR
    return FacetKind.CODIMENSION_TWICE


@lru_cache(maxsize=None)
def _boundary_facets_cached(w: Window, limit: int | None) -> tuple[BoundaryFacet, ...]:
    seen = set()
    out = []
    for chain in maximal_chains(w, limit):
        K = len(chain)
        if K == 1:
            continue  # a single ray has no codimension-one faces to support
        for r in range(K):
            if 0 < r < K - 1:
                kind = _is_boundary_triple(chain[r - 1], chain[r], chain[r + 1], w)
                if kind is FacetKind.INTERIOR:
                    continue
            else:
                kind = FacetKind.EXTREMAL
            remaining = chain.elements[:r] + chain.elements[r + 1:]
            key = frozenset(p.degrees for p in remaining)
            if key in seen:
                continue
            seen.add(key)
            f = coefficient_functional(
                chain[r - 1] if r > 0 else None,
                chain[r],
                chain[r + 1] if r < K - 1 else None,
                w,
            )
            out.append(
                BoundaryFacet(Chain(remaining, w), chain[r], kind, f)
            )
    return tuple(out)


def boundary_facets(w: Window, limit: int | None = 1_000_000) -> list[BoundaryFacet]:
    """All boundary facets of the fan of the window, deduplicated.

    Order is deterministic: maximal chains in tableau order, removal
    position ascending, first occurrence kept.
    """
    return list(_boundary_facets_cached(w, limit))


@dataclass(frozen=True)
class ConvexityReport:
    window: Window
    passed: bool
    facets_checked: int
    diagrams_checked: int
    counterexample: tuple[BoundaryFacet, PureDiagram, Fraction] | None


def verify_fan_convexity(w: Window, limit: int | None = 1_000_000) -> ConvexityReport:
    """Check that every boundary functional is >= 0 on every pure diagram.

    This is the desk-scale, extensional form of convexity of the fan; it
    enumerates boundary facets and window diagrams exhaustively, so the
    window must be small (``WindowTooLarge`` beyond ``limit`` chains).
    """
    facets = boundary_facets(w, limit)
    diagrams = list(w.pure_diagrams())
    for facet in facets:
        for p in diagrams:
            value = facet.functional(p.betti)
            if value < 0:
                return ConvexityReport(w, False, len(facets), len(diagrams), (facet, p, value))
    return ConvexityReport(w, True, len(facets), len(diagrams), None)


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    violated: BoundaryFacet | None = None
    value: Fraction | None = None

    def __bool__(self):
        return self.member


def membership_by_inequalities(
    b: BettiDiagram, w: Window, limit: int | None = 1_000_000
) -> MembershipResult:
    """Decide cone membership by the boundary-facet inequalities.

    The diagram must be supported in the window and satisfy its ``s_min``
    Herzog-Kuhl equations.  Member exactly when every boundary functional is
    nonnegative; otherwise the first violated facet (in enumeration order)
    is returned as certificate.
    """
    if b.n != w.n:
        raise WindowMismatch(f"diagram has n={b.n}, window has n={w.n}")
    for i, j in b.support():
        if not w.M <= j - i <= w.N:
            raise WindowMismatch(f"entry at ({i}, {j}) lies outside rows [{w.M}, {w.N}]")
    residuals = hk_residuals(b, w.s_min)
    if any(residuals):
        raise NotInSubspace(
            f"diagram violates the first {w.s_min} Herzog-Kuhl equations", residuals
        )
    for facet in boundary_facets(w, limit):
        value = facet.functional(b)
        if value < 0:
            return MembershipResult(False, facet, value)
    return MembershipResult(True)


def derived_window(b: BettiDiagram) -> Window:
    """The natural window of a diagram: support rows, s_min = codimension."""
    M, N = window_of(b)
    s = min(codimension(b), b.n)
    return Window(b.n, M, N, s)
