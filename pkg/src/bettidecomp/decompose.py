"""Greedy decomposition of a diagram into a chain of pure diagrams.

Any Betti diagram of a graded module is a positive combination of pure
diagrams forming a totally ordered chain, and the combination is unique.
The algorithm peels off the smallest chain element first: read the minimal
nonzero degree of every column up to the current projective dimension, form
the pure diagram of that degree sequence, and subtract as much of it as
possible while keeping all entries nonnegative.  Each step zeroes at least
one diagram position, positions never refill, and the degree sequences
strictly increase, so the loop terminates within the chain length of the
window spanned by the support.

Diagrams outside the cone fail in one of two ways: the minimal-degree
sequence stops being strictly increasing (or a column up to the projective
dimension empties), or the residual survives the loop guard.  Both raise
``NotInCone`` carrying the partial decomposition for diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import BettiDiagram, PureDiagram, pure_diagram
from .errors import InvalidDiagram, NotInCone
from .functionals import coefficient_functional, derived_window
from .poset import Chain, Window, leq


@dataclass(frozen=True)
class Decomposition:
    """Ordered positive combination sum coefficient * pi along a chain."""

    terms: tuple[tuple[Fraction, PureDiagram], ...]
    n: int

    def __post_init__(self):
        for coeff, _ in self.terms:
            if coeff <= 0:
                raise InvalidDiagram(f"coefficient {coeff} is not positive")
        elems = [p for _, p in self.terms]
        for a, b in zip(elems, elems[1:]):
            if a == b or not leq(a, b):
                raise InvalidDiagram(f"{a!r}, {b!r} do not form a strictly increasing chain")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def coefficients(self) -> list[Fraction]:
        return [c for c, _ in self.terms]

    def diagrams(self) -> list[PureDiagram]:
        return [p for _, p in self.terms]

    def reconstruct(self) -> BettiDiagram:
        total = BettiDiagram(self.n, {})
        for coeff, p in self.terms:
            total = total + p.betti.scaled(coeff)
        return total


def _leading_sequence(residual: BettiDiagram, partial):
    """Minimal nonzero degree per column, 0..projective dimension."""
    top = residual.projective_dimension()
    degs = []
    for i in range(top + 1):
        col = residual.column_degrees(i)
        if not col:
            raise NotInCone(
                NotInCone.INVALID_LEADING_SEQUENCE,
                f"column {i} is empty below the projective dimension {top}",
                partial=tuple(partial),
                residual=residual,
            )
        degs.append(col[0])
    if any(b <= a for a, b in zip(degs, degs[1:])):
        raise NotInCone(
            NotInCone.INVALID_LEADING_SEQUENCE,
            f"minimal degrees {tuple(degs)} are not strictly increasing",
            partial=tuple(partial),
            residual=residual,
        )
    return tuple(degs)


def greedy_decompose(b: BettiDiagram) -> Decomposition:
    """Decompose a nonnegative diagram, or raise ``NotInCone``.

    On success the terms reconstruct the input exactly, the chain is
    strictly increasing with weakly decreasing codimensions, and integer
    diagrams receive integer coefficients.

    >>> from bettidecomp import BettiDiagram
    >>> koszul = BettiDiagram(3, {(0, 0): 1, (1, 1): 3, (2, 2): 3, (3, 3): 1})
    >>> [(c, tuple(p.degrees)) for c, p in greedy_decompose(koszul)]
    [(Fraction(6, 1), (0, 1, 2, 3))]
    """
    if b.is_zero:
        raise InvalidDiagram("cannot decompose the zero diagram")
    for (i, j), v in b.items():
        if v < 0:
            raise InvalidDiagram(f"negative entry {v} at ({i}, {j})")
    terms: list[tuple[Fraction, PureDiagram]] = []
    residual = b
    max_steps = (b.n + 1) * (max(j - i for i, j in b.support()) - min(j - i for i, j in b.support()) + 1) + 1
    for _ in range(max_steps):
        if residual.is_zero:
            return Decomposition(tuple(terms), b.n)
        degs = _leading_sequence(residual, terms)
        element = pure_diagram(degs, b.n)
        coeff = min(residual[pos] / v for pos, v in element.betti.items())
        terms.append((coeff, element))
        residual = residual - element.betti.scaled(coeff)
    raise NotInCone(
        NotInCone.RESIDUAL,
        "residual did not reach zero within the chain bound",
        partial=tuple(terms),
        residual=residual,
    )


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


def verify_decomposition(dec: Decomposition, b: BettiDiagram) -> VerificationResult:
    """Independently check a decomposition against its claimed input.

    Verifies exact reconstruction, strict chain order and positivity (both
    enforced by the type, re-checked here on the data), then cross-checks
    every coefficient through the coefficient functional of its element
    inside a maximal chain refining the decomposition's chain.
    """
    if dec.n != b.n:
        return VerificationResult(False, "ambient_mismatch")
    if not dec.terms:
        return VerificationResult(b.is_zero, None if b.is_zero else "reconstruction")
    if dec.reconstruct() != b:
        return VerificationResult(False, "reconstruction")
    elems = dec.diagrams()
    for a, c in zip(elems, elems[1:]):
        if a == c or not leq(a, c):
            return VerificationResult(False, "chain_order")
    if any(coeff <= 0 for coeff in dec.coefficients()):
        return VerificationResult(False, "positivity")
    from .errors import BettiError
    from .poset import complete_chain

    try:
        w = derived_window(b)
        chain = Chain(tuple(elems), w)
        maximal = next(iter(complete_chain(chain)), None)
        if maximal is None:
            return VerificationResult(False, "no_maximal_refinement")
        index = {p: k for k, p in enumerate(maximal.elements)}
        K = len(maximal.elements)
        for coeff, p in dec.terms:
            k = index[p]
            f = coefficient_functional(
                maximal[k - 1] if k > 0 else None,
                maximal[k],
                maximal[k + 1] if k < K - 1 else None,
                w,
            )
            if f(b) != coeff:
                return VerificationResult(False, "functional_mismatch")
    except BettiError:
        return VerificationResult(False, "window_error")
    return VerificationResult(True)
