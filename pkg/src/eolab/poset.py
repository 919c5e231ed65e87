"""The quotient poset of length-n patterns under eo_leq.

Since two-sided eo_leq collapses to pattern equality, every equivalence
class at a fixed length is a single pattern and the quotient order is the
order on patterns themselves: bottom is the reversal, top is the
identity, and cover edges swap one pair of adjacent values that sit out
of order (removing exactly one inversion).

Everything is computed exhaustively, so lengths are capped (HARD_CAP
nodes at n=8 already number 40,320).  The structures here are finite
analogues of the class order on infinite r.e. sets; nothing at this
scale decides the infinite relations, and exports carry a scope note
saying so.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations

from .patterns import PREFIX_SCOPE_NOTE, OrderPattern, eo_leq, identity, inversions, reversal

#: Largest pattern length build_poset will attempt.
HARD_CAP = 8

#: Scope note attached to every export.
POSET_SCOPE_NOTE = "finite-prefix analogue of the class order; " + PREFIX_SCOPE_NOTE


class PosetRangeError(ValueError):
    """Requested length is outside 1..cap."""


class NoAntichainError(LookupError):
    """No antichain of the requested size exists at this length."""


def _check_n(n: int, cap: int) -> None:
    if cap < 1 or cap > HARD_CAP:
        raise PosetRangeError(f"cap {cap} outside 1..{HARD_CAP}")
    if n < 1 or n > cap:
        raise PosetRangeError(f"pattern length {n} outside 1..{cap}")


def all_patterns(n: int, cap: int = HARD_CAP) -> tuple[OrderPattern, ...]:
    """All n! patterns of length n in lexicographic order."""
    _check_n(n, cap)
    return tuple(OrderPattern(t) for t in permutations(range(n)))


@dataclass(frozen=True)
class PatternPoset:
    """All length-n patterns with the eo_leq relation and its cover edges.

    ``up[i]`` holds the indices j (including i itself) with
    ``nodes[i] <= nodes[j]``; ``hasse`` is the transitive reduction as
    sorted (lower, upper) index pairs into ``nodes``.
    """

    n: int
    nodes: tuple[OrderPattern, ...]
    up: tuple[frozenset[int], ...]
    hasse: tuple[tuple[int, int], ...]
    _index: dict[OrderPattern, int] = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.nodes)})

    def index(self, p: OrderPattern) -> int:
        return self._index[p]

    def leq(self, p: OrderPattern, q: OrderPattern) -> bool:
        return self._index[q] in self.up[self._index[p]]

    def covers(self, p: OrderPattern) -> tuple[OrderPattern, ...]:
        i = self._index[p]
        return tuple(self.nodes[b] for a, b in self.hasse if a == i)

    @property
    def maximum(self) -> OrderPattern:
        return identity(self.n)

    @property
    def minimum(self) -> OrderPattern:
        return reversal(self.n)


def build_poset(n: int, cap: int = HARD_CAP) -> PatternPoset:
    """Materialize the full relation and its transitive reduction.

    The relation is evaluated with eo_leq on all ordered pairs; the
    Hasse diagram is the generic transitive reduction (an edge survives
    iff nothing lies strictly between its endpoints).
    """
    nodes = all_patterns(n, cap)
    m = len(nodes)
    up = []
    for i, p in enumerate(nodes):
        up.append(frozenset(j for j, q in enumerate(nodes) if eo_leq(p, q)))
    strict_up = [up[i] - {i} for i in range(m)]

    hasse = []
    for i in range(m):
        through = set()
        for w in strict_up[i]:
            through |= strict_up[w]
        hasse.extend((i, j) for j in sorted(strict_up[i] - through))
    hasse.sort()

    poset = PatternPoset(n=n, nodes=nodes, up=tuple(up), hasse=tuple(hasse))
    assert poset.up[poset.index(poset.minimum)] == frozenset(range(m))
    assert all(poset.index(poset.maximum) in u for u in poset.up)
    return poset


@dataclass(frozen=True)
class Chain:
    """A sequence of patterns strictly increasing under eo_leq."""

    patterns: tuple[OrderPattern, ...]

    def __post_init__(self):
        object.__setattr__(self, "patterns", tuple(self.patterns))
        if not self.patterns:
            raise ValueError("empty chain")
        for a, b in zip(self.patterns, self.patterns[1:]):
            if a == b or not eo_leq(a, b):
                raise ValueError(f"consecutive patterns {a.ranks} and {b.ranks} not strictly related")

    def __len__(self) -> int:
        return len(self.patterns)


@dataclass(frozen=True)
class Antichain:
    """A set of pairwise eo-incomparable patterns."""

    patterns: frozenset[OrderPattern]

    def __post_init__(self):
        object.__setattr__(self, "patterns", frozenset(self.patterns))
        items = sorted(self.patterns, key=lambda p: p.ranks)
        for a_i, a in enumerate(items):
            for b in items[a_i + 1 :]:
                if eo_leq(a, b) or eo_leq(b, a):
                    raise ValueError(f"patterns {a.ranks} and {b.ranks} are comparable")

    def __len__(self) -> int:
        return len(self.patterns)

    def sorted_patterns(self) -> tuple[OrderPattern, ...]:
        return tuple(sorted(self.patterns, key=lambda p: p.ranks))


def max_chain(n: int, cap: int = HARD_CAP) -> Chain:
    """A longest chain from the reversal to the identity.

    Each step removes exactly one inversion by swapping a pair of
    adjacent values that are out of order, so the chain has
    n(n-1)/2 + 1 patterns and every step is a cover edge.  Tie-break:
    always fix the leftmost descent, i.e. the first position whose value
    has its predecessor sitting further right.
    """
    _check_n(n, cap)
    current = list(range(n - 1, -1, -1))
    chain = [OrderPattern(tuple(current))]
    target = list(range(n))
    while current != target:
        position = {v: i for i, v in enumerate(current)}
        for i, v in enumerate(current):
            if v >= 1 and position[v - 1] > i:
                j = position[v - 1]
                current[i], current[j] = current[j], current[i]
                break
        chain.append(OrderPattern(tuple(current)))
    return Chain(tuple(chain))


def sample_antichain(n: int, size: int, cap: int = HARD_CAP) -> Antichain:
    """The lexicographically least antichain of the requested size.

    Greedy scan in lexicographic node order with backtracking, so an
    antichain is found whenever one exists; raises NoAntichainError
    otherwise (e.g. n <= 2, where the poset is a chain).
    """
    _check_n(n, cap)
    if size < 2:
        raise ValueError(f"antichain size must be >= 2, got {size}")
    nodes = all_patterns(n, cap)

    def extend(start: int, chosen: list[OrderPattern]) -> list[OrderPattern] | None:
        if len(chosen) == size:
            return chosen
        for idx in range(start, len(nodes)):
            candidate = nodes[idx]
            if all(
                not eo_leq(candidate, picked) and not eo_leq(picked, candidate)
                for picked in chosen
            ):
                found = extend(idx + 1, chosen + [candidate])
                if found is not None:
                    return found
        return None

    found = extend(0, [])
    if found is None:
        raise NoAntichainError(f"no antichain of size {size} among length-{n} patterns")
    return Antichain(frozenset(found))


def _label(p: OrderPattern) -> str:
    return "".join(str(v) for v in p.ranks)


def export(poset: PatternPoset, format: str) -> str:
    """Render the poset as DOT or JSON; byte-stable for a fixed input."""
    if format == "dot":
        lines = [
            "digraph pattern_poset {",
            f'  label="{POSET_SCOPE_NOTE}";',
        ]
        lines.extend(f'  "{_label(p)}";' for p in poset.nodes)
        lines.extend(
            f'  "{_label(poset.nodes[a])}" -> "{_label(poset.nodes[b])}";'
            for a, b in poset.hasse
        )
        lines.append("}")
        return "\n".join(lines) + "\n"
    if format == "json":
        doc = {
            "n": poset.n,
            "nodes": [p.to_json() for p in poset.nodes],
            "hasse": [[a, b] for a, b in poset.hasse],
            "scope": POSET_SCOPE_NOTE,
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    raise ValueError(f"unknown export format {format!r} (expected 'dot' or 'json')")


def rank(p: OrderPattern) -> int:
    """Number of inversions; the grading of the poset (0 at the top)."""
    return len(inversions(p))
