"""Order patterns of finite injective sequences and the relations on them.

A listing prefix is a finite injective sequence of naturals (the first n
values emitted by some enumeration).  Its order pattern is the permutation
of [0, n) recording each entry's rank within the prefix; two prefixes have
the same pattern exactly when they are order-isomorphic position by
position.  On equal-length patterns this module decides:

- ``eo_leq``: every ascending index pair of the left pattern is ascending
  in the right one (equivalently, reverse containment of inversion sets);
- ``uniform``: positionwise order-isomorphism, i.e. pattern equality;
- ``eo_equiv``: ``eo_leq`` in both directions (coincides with ``uniform``).

All verdicts are about finite prefixes only.  Prefix truth is necessary
but never sufficient for the corresponding relation on infinite listings,
which is undecidable; see ``PREFIX_SCOPE_NOTE``.

Everything here is an immutable value and every function is pure.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

#: Elements are naturals that must fit in 64 unsigned bits.
MAX_ELEMENT = 2**64 - 1

#: Stated on every surface that reports a relation verdict.
PREFIX_SCOPE_NOTE = (
    "finite-prefix verdict: necessary but not sufficient for the relation "
    "on infinite listings"
)


class DuplicateElementError(ValueError):
    """A sequence that must be injective repeats a value."""

    def __init__(self, value: int, first_index: int, second_index: int):
        self.value = value
        self.first_index = first_index
        self.second_index = second_index
        super().__init__(
            f"duplicate element {value} at positions {first_index} and {second_index}"
        )


class LengthMismatchError(ValueError):
    """Two sequences that must have equal length do not."""

    def __init__(self, left_length: int, right_length: int):
        self.left_length = left_length
        self.right_length = right_length
        super().__init__(f"length mismatch: {left_length} vs {right_length}")


@dataclass(frozen=True)
class OrderPattern:
    """The relative-order fingerprint of an injective sequence.

    ``ranks[i]`` is the rank of the i-th entry among all n entries, so
    ``ranks`` is always a permutation of ``range(n)``; length 0 is
    rejected.
    """

    ranks: tuple[int, ...]

    def __post_init__(self):
        ranks = tuple(self.ranks)
        object.__setattr__(self, "ranks", ranks)
        n = len(ranks)
        if n == 0:
            raise ValueError("empty pattern (length must be >= 1)")
        if sorted(ranks) != list(range(n)):
            raise ValueError(f"ranks {ranks} are not a permutation of 0..{n - 1}")

    def __len__(self) -> int:
        return len(self.ranks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ranks)

    def __getitem__(self, i: int) -> int:
        return self.ranks[i]

    def to_json(self) -> list[int]:
        """JSON form: an array of naturals, e.g. [1, 0, 2]."""
        return list(self.ranks)


@dataclass(frozen=True)
class PairSet:
    """A set of index pairs (i, j) with 0 <= i < j < n."""

    pairs: frozenset[tuple[int, int]]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        for i, j in self.pairs:
            if not 0 <= i < j < self.n:
                raise ValueError(f"pair ({i}, {j}) out of range for length {self.n}")

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in self.pairs

    def to_json(self) -> list[list[int]]:
        """JSON form: lexicographically sorted array of [i, j] arrays."""
        return [[i, j] for i, j in sorted(self.pairs)]


@dataclass(frozen=True)
class ListingPrefix:
    """An injective finite sequence of naturals; a prefix of a listing."""

    elements: tuple[int, ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if not elements:
            raise ValueError("empty prefix (length must be >= 1)")
        seen: dict[int, int] = {}
        for pos, value in enumerate(elements):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"element at position {pos} is not a natural: {value!r}")
            if value < 0 or value > MAX_ELEMENT:
                raise ValueError(f"element {value} at position {pos} outside 0..{MAX_ELEMENT}")
            if value in seen:
                raise DuplicateElementError(value, seen[value], pos)
            seen[value] = pos

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> int:
        return self.elements[i]

    def to_json(self) -> list[int]:
        return list(self.elements)


def identity(n: int) -> OrderPattern:
    """The sorted pattern [0, 1, ..., n-1]; the unique maximum under eo_leq."""
    if n < 1:
        raise ValueError("pattern length must be >= 1")
    return OrderPattern(tuple(range(n)))


def reversal(n: int) -> OrderPattern:
    """The descending pattern [n-1, ..., 0]; the unique minimum under eo_leq."""
    if n < 1:
        raise ValueError("pattern length must be >= 1")
    return OrderPattern(tuple(range(n - 1, -1, -1)))


def pattern_of(prefix: ListingPrefix | Sequence[int]) -> OrderPattern:
    """Canonicalize an injective sequence to its order pattern.

    Position i gets rank ``|{k : prefix[k] < prefix[i]}|``.

    >>> pattern_of([5, 2, 9]).ranks
    (1, 0, 2)
    >>> pattern_of([0, 1, 2, 3]).ranks
    (0, 1, 2, 3)
    """
    if not isinstance(prefix, ListingPrefix):
        prefix = ListingPrefix(tuple(prefix))
    rank_by_value = {v: r for r, v in enumerate(sorted(prefix.elements))}
    return OrderPattern(tuple(rank_by_value[v] for v in prefix.elements))


@functools.lru_cache(maxsize=None)
def _ascent_pairs(ranks: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    n = len(ranks)
    return frozenset(
        (i, j) for i in range(n) for j in range(i + 1, n) if ranks[i] < ranks[j]
    )


def ascents(p: OrderPattern) -> PairSet:
    """Index pairs (i, j), i < j, with p[i] < p[j].

    >>> ascents(OrderPattern((1, 0, 2))).to_json()
    [[0, 2], [1, 2]]
    """
    return PairSet(_ascent_pairs(p.ranks), len(p))


def inversions(p: OrderPattern) -> PairSet:
    """Index pairs (i, j), i < j, with p[i] > p[j]; complement of ascents."""
    n = len(p)
    all_pairs = frozenset((i, j) for i in range(n) for j in range(i + 1, n))
    return PairSet(all_pairs - _ascent_pairs(p.ranks), n)


def _check_lengths(p: OrderPattern, q: OrderPattern) -> None:
    if len(p) != len(q):
        raise LengthMismatchError(len(p), len(q))


def eo_leq(p: OrderPattern, q: OrderPattern) -> bool:
    """Whether every ascent of p is an ascent of q.

    Equivalent to ``ascents(p) <= ascents(q)`` and to
    ``inversions(q) <= inversions(p)``.  Reflexive; a partial order on
    equal-length patterns.

    >>> eo_leq(OrderPattern((1, 0, 2)), OrderPattern((0, 1, 2)))
    True
    >>> eo_leq(OrderPattern((0, 1)), OrderPattern((1, 0)))
    False
    """
    _check_lengths(p, q)
    return _ascent_pairs(p.ranks) <= _ascent_pairs(q.ranks)


def eo_lt(p: OrderPattern, q: OrderPattern) -> bool:
    """Strict variant of eo_leq: related and distinct."""
    return p != q and eo_leq(p, q)


def uniform(p: OrderPattern, q: OrderPattern) -> bool:
    """Positionwise order-isomorphism: for injective sequences this is
    exactly pattern equality."""
    _check_lengths(p, q)
    return p.ranks == q.ranks


def eo_equiv(p: OrderPattern, q: OrderPattern) -> bool:
    """eo_leq in both directions; coincides with ``uniform`` on patterns."""
    return eo_leq(p, q) and eo_leq(q, p)


def incomparable(p: OrderPattern, q: OrderPattern) -> bool:
    """Neither direction of eo_leq holds."""
    return not eo_leq(p, q) and not eo_leq(q, p)


def apply_pattern(p: OrderPattern, support: Iterable[int]) -> ListingPrefix:
    """The unique arrangement of ``support`` whose pattern is ``p``.

    Position i carries the element of rank p[i] in sorted(support), so
    ``pattern_of(apply_pattern(p, s)) == p``.

    >>> apply_pattern(OrderPattern((1, 0, 2)), {4, 8, 15}).elements
    (8, 4, 15)
    """
    values = list(support)
    seen: dict[int, int] = {}
    for pos, value in enumerate(values):
        if value in seen:
            raise DuplicateElementError(value, seen[value], pos)
        seen[value] = pos
    if len(values) != len(p):
        raise LengthMismatchError(len(p), len(values))
    ordered = sorted(values)
    return ListingPrefix(tuple(ordered[r] for r in p.ranks))


def prefix_restrict(p: OrderPattern, k: int) -> OrderPattern:
    """The pattern of the first k entries of any sequence realizing p.

    >>> prefix_restrict(OrderPattern((2, 0, 3, 1)), 3).ranks
    (1, 0, 2)
    """
    if not 1 <= k <= len(p):
        raise ValueError(f"prefix length {k} out of range 1..{len(p)}")
    return pattern_of(p.ranks[:k])
