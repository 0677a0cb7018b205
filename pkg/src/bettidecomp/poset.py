"""The partial order on pure diagrams, maximal chains, and tableaux.

Pure diagrams are ordered by

    pi(d_0..d_s) <= pi(e_0..e_t)   iff   s >= t and d_i <= e_i for i <= t,

so going *up* means raising degrees and dropping codimension.  Inside a
bounded window ``M + i <= d_i <= N + i`` with codimension at least ``s_min``
the poset has a unique minimum ``pi(M, M+1, ..., M+n)`` and maximum
``pi(N, N+1, ..., N+s_min)``, and every maximal chain has

    (n + 1)(N - M) + n - s_min + 1

elements: each of the n + 1 degrees climbs N - M steps, and the codimension
drops n - s_min times.

The cover relation is one of two elementary moves:

  (a) raise a single degree d_i by one (staying strictly increasing and
      below the ceiling N + i), or
  (b) delete the last degree d_s, allowed exactly when d_s = N + s.

Walking up a maximal chain, each move permanently vacates one cell of the
(N - M + 1) x (n + 1) display grid.  Numbering the cells in vacating order
(survivors of the maximum last, bottom row right to left) yields a numbering
that increases to the left along rows and downwards along columns, and this
is a bijection between maximal chains and such numberings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import DegreeSequence, PureDiagram, pure_diagram
from .errors import (
    ChainNotMaximal,
    InvalidTableau,
    NotAChain,
    WindowMismatch,
    WindowTooLarge,
)


@dataclass(frozen=True)
class Window:
    """Bounded region of pure diagrams: degrees M+i <= d_i <= N+i, codim >= s_min."""

    n: int
    M: int
    N: int
    s_min: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise WindowMismatch("n must be >= 0")
        if self.M > self.N:
            raise WindowMismatch(f"need M <= N, got M={self.M}, N={self.N}")
        if not 0 <= self.s_min <= self.n:
            raise WindowMismatch(f"s_min={self.s_min} outside [0, {self.n}]")

    @property
    def rows(self) -> int:
        return self.N - self.M + 1

    @property
    def grid_size(self) -> int:
        return self.rows * (self.n + 1)

    def min_element(self) -> PureDiagram:
        return pure_diagram(range(self.M, self.M + self.n + 1), self.n)

    def max_element(self) -> PureDiagram:
        return pure_diagram(range(self.N, self.N + self.s_min + 1), self.n)

    def contains(self, p: PureDiagram) -> bool:
        if p.n != self.n or p.codimension < self.s_min:
            return False
        return all(self.M + i <= d <= self.N + i for i, d in enumerate(p.degrees))

    def pure_diagrams(self) -> Iterator[PureDiagram]:
        """All pure diagrams in the window, smallest codimension last.

        Deterministic order: codimension descending, then degrees
        lexicographically ascending.
        """
        for s in range(self.n, self.s_min - 1, -1):
            stack = [()]
            seqs = []

            def extend(prefix, i, s=s, seqs=seqs):
                if i == s + 1:
                    seqs.append(prefix)
                    return
                lo = max(self.M + i, (prefix[-1] + 1) if prefix else self.M + i)
                for v in range(lo, self.N + i + 1):
                    extend(prefix + (v,), i + 1)

            extend((), 0)
            for seq in seqs:
                yield pure_diagram(seq, self.n)


def leq(p: PureDiagram, q: PureDiagram) -> bool:
    """Partial-order test; incomparable pairs fail in both directions."""
    s, t = p.codimension, q.codimension
    if s < t:
        return False
    return all(p.degrees[i] <= q.degrees[i] for i in range(t + 1))


def _raise_moves(d: tuple, w: Window):
    """Indices i where d_i can be raised by one inside w."""
    last = len(d) - 1
    for i in range(last + 1):
        if d[i] + 1 > w.N + i:
            continue
        if i < last and d[i] + 1 >= d[i + 1]:
            continue
        yield i


def _can_drop(d: tuple, w: Window) -> bool:
    s = len(d) - 1
    return s - 1 >= w.s_min and d[s] == w.N + s


def _moves(d: tuple, w: Window):
    """All covers of pi(d) in w, as (new_degrees, vacated_cell) pairs.

    The vacated cell is (row, column) on the display grid, row = j - i - M.
    """
    out = []
    for i in _raise_moves(d, w):
        nd = d[:i] + (d[i] + 1,) + d[i + 1:]
        out.append((nd, (d[i] - i - w.M, i)))
    if _can_drop(d, w):
        s = len(d) - 1
        out.append((d[:-1], (d[s] - s - w.M, s)))
    return out


def covers(p: PureDiagram, q: PureDiagram, w: Window) -> bool:
    """True when q is obtained from p by a single raise or ceiling drop."""
    for diag in (p, q):
        if not w.contains(diag):
            raise WindowMismatch(f"{diag!r} is not a valid diagram of {w}")
    return tuple(q.degrees) in {nd for nd, _ in _moves(tuple(p.degrees), w)}


def chain_length(w: Window) -> int:
    """Number of elements in every maximal chain of the window."""
    return (w.n + 1) * (w.N - w.M) + w.n - w.s_min + 1


@dataclass(frozen=True)
class Chain:
    """Strictly increasing tuple of pure diagrams inside a window."""

    elements: tuple[PureDiagram, ...]
    window: Window

    def __post_init__(self):
        if not self.elements:
            raise NotAChain("chain must be nonempty")
        for p in self.elements:
            if not self.window.contains(p):
                raise WindowMismatch(f"{p!r} is not a valid diagram of {self.window}")
        for a, b in zip(self.elements, self.elements[1:]):
            if a == b or not leq(a, b):
                raise NotAChain(f"{a!r} and {b!r} are not strictly increasing")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    def degree_sequences(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(p.degrees) for p in self.elements)

    def is_maximal(self) -> bool:
        w = self.window
        if len(self.elements) != chain_length(w):
            return False
        if self.elements[0] != w.min_element() or self.elements[-1] != w.max_element():
            return False
        return all(
            covers(a, b, w) for a, b in zip(self.elements, self.elements[1:])
        )


@dataclass(frozen=True)
class Tableau:
    """Numbering of the display grid, increasing to the left and downwards."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise InvalidTableau("tableau must be rectangular and nonempty")
        size = len(rows) * len(rows[0])
        if sorted(x for r in rows for x in r) != list(range(1, size + 1)):
            raise InvalidTableau(f"entries must be a permutation of 1..{size}")
        for r in rows:
            if any(r[c] <= r[c + 1] for c in range(len(r) - 1)):
                raise InvalidTableau("rows must increase to the left")
        for c in range(len(rows[0])):
            col = [r[c] for r in rows]
            if any(col[k] >= col[k + 1] for k in range(len(col) - 1)):
                raise InvalidTableau("columns must increase downwards")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def position_of(self, number: int) -> tuple[int, int]:
        for r, row in enumerate(self.rows):
            for c, x in enumerate(row):
                if x == number:
                    return r, c
        raise KeyError(number)

    def row_major(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)


def chain_from_tableau(t: Tableau, w: Window) -> Chain:
    """Rebuild the maximal chain whose k-th move vacates the cell numbered k.

    Inverse of :func:`tableau_from_chain`.  Raises ``InvalidTableau`` when
    the numbering does not describe a chain of the window (wrong shape, a
    numbered cell that is not the current position of its column, or
    survivors of the maximum not numbered last, bottom row right to left).
    """
    if t.shape != (w.rows, w.n + 1):
        raise InvalidTableau(f"tableau shape {t.shape} does not match window grid {(w.rows, w.n + 1)}")
    position = {}
    for r, row in enumerate(t.rows):
        for c, x in enumerate(row):
            position[x] = (r, c)
    steps = chain_length(w) - 1
    cur = list(range(w.M, w.M + w.n + 1))
    seqs = [tuple(cur)]
    for k in range(1, steps + 1):
        r, i = position[k]
        if i >= len(cur) or cur[i] != w.M + i + r:
            raise InvalidTableau(f"cell numbered {k} is not vacated at step {k}")
        last = len(cur) - 1
        if i == last and cur[i] == w.N + i:
            if last - 1 < w.s_min:
                raise InvalidTableau(f"step {k} would drop codimension below s_min")
            cur.pop()
        else:
            if cur[i] + 1 > w.N + i or (i < last and cur[i] + 1 >= cur[i + 1]):
                raise InvalidTableau(f"step {k} is not a valid raise")
            cur[i] += 1
        seqs.append(tuple(cur))
    if cur != list(range(w.N, w.N + w.s_min + 1)):
        raise InvalidTableau("chain does not end at the window maximum")
    for c in range(w.s_min + 1):
        if position[steps + 1 + (w.s_min - c)] != (w.rows - 1, c):
            raise InvalidTableau("surviving cells must carry the last numbers, right to left")
    return Chain(tuple(pure_diagram(s, w.n) for s in seqs), w)


def tableau_from_chain(c: Chain) -> Tableau:
    """Number each grid cell by the chain step that vacates it."""
    if not c.is_maximal():
        raise ChainNotMaximal("tableau is defined for maximal chains only")
    w = c.window
    grid = [[0] * (w.n + 1) for _ in range(w.rows)]
    seqs = c.degree_sequences()
    for k in range(1, len(seqs)):
        a, b = seqs[k - 1], seqs[k]
        if len(b) == len(a):
            i = next(i for i in range(len(a)) if a[i] != b[i])
        else:
            i = len(a) - 1
        grid[a[i] - i - w.M][i] = k
    steps = len(seqs) - 1
    for col in range(w.s_min + 1):
        grid[w.rows - 1][col] = steps + 1 + (w.s_min - col)
    return Tableau(tuple(tuple(r) for r in grid))


def _enumerate_chain_seqs(w: Window, limit: int | None):
    start = tuple(range(w.M, w.M + w.n + 1))
    found = []
    stack = [(start, (start,))]
    while stack:
        cur, acc = stack.pop()
        nxt = _moves(cur, w)
        if not nxt:
            found.append(acc)
            if limit is not None and len(found) > limit:
                raise WindowTooLarge(f"window has more than {limit} maximal chains")
            continue
        for nd, _ in nxt:
            stack.append((nd, acc + (nd,)))
    return found


def count_maximal_chains(w: Window, limit: int | None = None) -> int:
    """Number of maximal chains, without materializing Chain objects."""
    return len(_enumerate_chain_seqs(w, limit))


def maximal_chains(w: Window, limit: int | None = None) -> Iterator[Chain]:
    """Enumerate every maximal chain once, ordered by row-major tableau.

    The order is part of the contract: chains are sorted by the row-major
    reading of their tableau numbering, lexicographically.  ``limit`` guards
    the enumeration (``WindowTooLarge`` beyond it).
    """
    seqs = _enumerate_chain_seqs(w, limit)
    chains = [Chain(tuple(pure_diagram(s, w.n) for s in seq), w) for seq in seqs]
    chains.sort(key=lambda c: tableau_from_chain(c).row_major())
    yield from chains


def complete_chain(c: Chain, limit: int | None = None) -> Iterator[Chain]:
    """All maximal chains of c's window containing c, in tableau order."""
    w = c.window
    targets = c.degree_sequences()
    start = tuple(range(w.M, w.M + w.n + 1))
    found = []

    def admissible(seq, idx):
        # still able to pass through targets[idx:]
        if idx >= len(targets):
            return True
        t = targets[idx]
        # seq must be <= t in the order
        if len(seq) < len(t):
            return False
        return all(seq[i] <= t[i] for i in range(len(t)))

    stack = [(start, (start,), 0)]
    while stack:
        cur, acc, idx = stack.pop()
        if idx < len(targets) and cur == targets[idx]:
            idx += 1
        if not admissible(cur, idx):
            continue
        nxt = _moves(cur, w)
        if not nxt:
            if idx == len(targets):
                found.append(acc)
                if limit is not None and len(found) > limit:
                    raise WindowTooLarge(f"more than {limit} completions")
            continue
        for nd, _ in nxt:
            stack.append((nd, acc + (nd,), idx))
    chains = [Chain(tuple(pure_diagram(s, w.n) for s in seq), w) for seq in found]
    chains.sort(key=lambda ch: tableau_from_chain(ch).row_major())
    yield from chains
