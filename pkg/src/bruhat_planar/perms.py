"""
Permutations in one-line notation: parsing, length statistics, cycles and
classical pattern containment.

Entries are 1-based, so ``Permutation((3, 4, 1, 2))`` sends 1 to 3, 2 to 4 and
so on.

>>> p = parse_one_line("3412")
>>> coxeter_length(p), absolute_length(p)
(4, 2)
>>> cycle_decomposition(p)
[[1, 3], [2, 4]]
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "PermutationError", "Permutation", "Transposition", "Embedding",
    "parse_one_line", "identity", "coxeter_length", "absolute_length",
    "cycle_decomposition", "from_cycles", "apply_transposition",
    "embeddings", "contains_pattern", "avoids_all", "flatten",
    "all_permutations", "permutations_up_to",
]

# a strictly increasing tuple of 1-based positions
Embedding = tuple[int, ...]


class PermutationError(ValueError):
    """Raised for text or sequences that do not describe a permutation."""


class Permutation(tuple):
    """An immutable permutation of ``1..n`` stored as its one-line word."""

    __slots__ = ()

    def __new__(cls, word: Iterable[int] = ()) -> "Permutation":
        word = tuple(word)
        if not word:
            raise PermutationError("a permutation needs at least one entry")
        if any(not isinstance(x, int) or isinstance(x, bool) for x in word):
            raise PermutationError(f"entries must be integers: {word!r}")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise PermutationError(f"not a permutation of 1..{len(word)}: {word!r}")
        return tuple.__new__(cls, word)

    @classmethod
    def _trusted(cls, word: Iterable[int]) -> "Permutation":
        # skips validation; callers guarantee a rearrangement of 1..n
        return tuple.__new__(cls, word)

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation._trusted(inv)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Order by size first, then lexicographically by word."""
        return (len(self), tuple(self))

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


@dataclass(frozen=True, order=True)
class Transposition:
    """The 2-cycle ``(a b)`` with ``a < b``."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not 1 <= self.a < self.b:
            raise PermutationError(f"bad transposition ({self.a} {self.b})")

    def __str__(self) -> str:
        return f"({self.a} {self.b})"


_DIGITS = re.compile(r"[1-9]+")
_COMMAS = re.compile(r"\d+(\s*,\s*\d+)*")


def parse_one_line(text: str) -> Permutation:
    """
    Parse ``"3412"`` or ``"10,2,3,4,5,6,7,8,9,1"``.

    The bare digit form only works for permutations of size at most 9.

    >>> parse_one_line("10,2,3,4,5,6,7,8,9,1").size
    10
    """
    text = text.strip()
    if _DIGITS.fullmatch(text):
        word = [int(c) for c in text]
        if len(word) > 9:
            raise PermutationError(f"digit strings only describe sizes <= 9: {text!r}")
    elif _COMMAS.fullmatch(text):
        word = [int(c) for c in text.split(",")]
    else:
        raise PermutationError(f"malformed permutation text: {text!r}")
    return Permutation(word)


def identity(n: int) -> Permutation:
    return Permutation._trusted(range(1, n + 1))


def coxeter_length(p: Sequence[int]) -> int:
    """Number of inversions, i.e. pairs ``i < j`` with ``p(i) > p(j)``."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def cycle_decomposition(p: Sequence[int]) -> list[list[int]]:
    """
    Disjoint cycles of ``p``, fixed points included.

    Each cycle starts at its smallest element and follows ``i -> p(i)``;
    cycles are listed by their smallest element.
    """
    seen = [False] * (len(p) + 1)
    cycles = []
    for start in range(1, len(p) + 1):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = p[i - 1]
        cycles.append(cycle)
    return cycles


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    word = list(range(1, n + 1))
    for cycle in cycles:
        for i, x in enumerate(cycle):
            word[x - 1] = cycle[(i + 1) % len(cycle)]
    return Permutation(word)


def absolute_length(p: Sequence[int]) -> int:
    """Size minus the number of cycles: the fewest transpositions giving ``p``."""
    return len(p) - len(cycle_decomposition(p))


def apply_transposition(t: Transposition, p: Permutation) -> Permutation:
    """Left multiplication ``t * p``: swap the values ``t.a`` and ``t.b`` in the word."""
    if t.b > len(p):
        raise PermutationError(f"{t} out of range for a permutation of size {len(p)}")
    swap = {t.a: t.b, t.b: t.a}
    return Permutation._trusted(swap.get(x, x) for x in p)


def flatten(values: Sequence[int]) -> Permutation:
    """The permutation with the same relative order as ``values``."""
    ranks = {v: r for r, v in enumerate(sorted(values), 1)}
    return Permutation._trusted(ranks[v] for v in values)


def _embeddings(pattern: Sequence[int], target: Sequence[int]) -> Iterator[tuple[int, ...]]:
    k, n = len(pattern), len(target)
    # for pattern position a, which earlier positions hold smaller / larger values
    below = [[b for b in range(a) if pattern[b] < pattern[a]] for a in range(k)]
    above = [[b for b in range(a) if pattern[b] > pattern[a]] for a in range(k)]
    chosen = [0] * k

    def extend(a: int, start: int) -> Iterator[tuple[int, ...]]:
        if a == k:
            yield tuple(i + 1 for i in chosen)
            return
        for i in range(start, n - (k - a) + 1):
            v = target[i]
            if all(target[chosen[b]] < v for b in below[a]) and all(
                target[chosen[b]] > v for b in above[a]
            ):
                chosen[a] = i
                yield from extend(a + 1, i + 1)

    return extend(0, 0)


def embeddings(pattern: Sequence[int], target: Sequence[int]) -> list[Embedding]:
    """
    Every occurrence of ``pattern`` in ``target`` as 1-based index tuples,
    in lexicographic order.

    >>> embeddings(parse_one_line("3412"), parse_one_line("5736241"))
    [(1, 2, 3, 6), (1, 2, 5, 6), (1, 4, 5, 6)]
    """
    if len(pattern) > len(target):
        raise PermutationError("pattern is larger than target")
    return list(_embeddings(pattern, target))


def contains_pattern(pattern: Sequence[int], target: Sequence[int]) -> bool:
    if len(pattern) > len(target):
        return False
    return next(_embeddings(pattern, target), None) is not None


def avoids_all(target: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return not any(contains_pattern(q, target) for q in patterns)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(word)


def permutations_up_to(max_length: int, n: int) -> Iterator[Permutation]:
    """
    Permutations of S_n with at most ``max_length`` inversions, lexicographic.

    Builds words left to right and drops a prefix once its inversions
    (which can only grow) exceed the bound.
    """
    word: list[int] = []
    free = list(range(1, n + 1))

    def extend(inv: int) -> Iterator[Permutation]:
        if not free:
            yield Permutation._trusted(word)
            return
        # placing free[r] next creates r new inversions with the later, smaller values
        for r in range(len(free)):
            if inv + r > max_length:
                break
            v = free.pop(r)
            word.append(v)
            yield from extend(inv + r)
            word.pop()
            free.insert(r, v)

    return extend(0)
