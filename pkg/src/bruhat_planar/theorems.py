"""
Exhaustive checks of the length-bound and planarity results, and
minimal avoidance basis search.

Every ``verify_*`` function walks a finite family of permutations and
returns a :class:`VerificationReport` listing whatever broke the claim.
"""

from __future__ import annotations

import functools
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .bruhat import (
    bruhat_graph,
    bruhat_leq,
    bruhat_leq_oracle,
    complete_bipartite_graph,
    complete_graph,
    hypercube_graph,
    is_hypercube,
    underlying_undirected,
    UndirectedGraph,
)
from .perms import (
    Permutation,
    all_permutations,
    contains_pattern,
    coxeter_length,
    cycle_decomposition,
    flatten,
    permutations_up_to,
)
from .planarity import is_planar, kuratowski_oracle

__all__ = [
    "BasisReport", "VerificationReport",
    "planar_by_characterization", "planar_bad", "length_at_least",
    "compute_basis", "planar_basis", "length_basis",
    "verify_planar_characterization", "verify_cube_classification",
    "verify_length_basis", "verify_sharpness", "verify_lemmas",
    "verify_fixed_point_lemma", "verify_cycle_lemma", "verify_disjoint_cycles_lemma",
    "verify_counts", "planar_count_formula",
    "verify_bruhat_oracle", "verify_planarity_oracle", "planarity_corpus",
]

_321 = Permutation((3, 2, 1))


@dataclass(frozen=True)
class BasisReport:
    property_name: str
    ceiling: int
    basis: tuple[Permutation, ...]
    candidates: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "property": self.property_name,
            "ceiling": self.ceiling,
            "candidates": self.candidates,
            "basis": [str(p) for p in self.basis],
        }


@dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of one suite. ``counterexamples`` normally holds permutations;
    the counting suite stores ``(m, length, found, expected)`` rows instead.
    """

    suite: str
    params: dict[str, int]
    checked: int
    counterexamples: tuple = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "params": dict(self.params),
            "checked": self.checked,
            "passed": self.passed,
            "counterexamples": [
                str(c) if isinstance(c, Permutation) else [_plain(x) for x in c]
                for c in self.counterexamples
            ],
            "notes": list(self.notes),
        }

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        verdict = "PASS" if self.passed else f"FAIL ({len(self.counterexamples)} counterexamples)"
        return f"{self.suite} [{params}]: checked {self.checked}, {verdict}"


def _plain(x: Any) -> Any:
    return str(x) if isinstance(x, Permutation) else x


def _scan(check: Callable[[Any], bool], items: Iterable[Any], workers: int = 1):
    """Return (items checked, items for which ``check`` is False), in input order."""
    items = list(items)
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(check, items, chunksize=max(1, len(items) // (8 * workers))))
    else:
        results = [check(x) for x in items]
    return len(items), tuple(x for x, ok in zip(items, results) if not ok)


def _perms_up_to_size(max_m: int, min_m: int = 1) -> Iterable[Permutation]:
    for m in range(min_m, max_m + 1):
        yield from all_permutations(m)


def planar_by_characterization(p: Permutation) -> bool:
    """Planar B(p) predicted without building the graph: avoids 321, length <= 3."""
    return coxeter_length(p) <= 3 and not contains_pattern(_321, p)


def planar_bad(p: Permutation) -> bool:
    return not planar_by_characterization(p)


def _length_bad(n: int, p: Permutation) -> bool:
    return coxeter_length(p) >= n


def length_at_least(n: int) -> Callable[[Permutation], bool]:
    return functools.partial(_length_bad, n)


def compute_basis(
    bad: Callable[[Permutation], bool], max_size: int, name: str = "custom"
) -> BasisReport:
    """
    Minimal permutations of size <= ``max_size`` having an upward-closed
    property ``bad``.

    Sizes are scanned in increasing order; a permutation is kept when it is
    bad and contains none of the elements kept so far.
    """
    basis: list[Permutation] = []
    examined = 0
    for m in range(1, max_size + 1):
        found = []
        for p in all_permutations(m):
            examined += 1
            if bad(p) and not any(contains_pattern(b, p) for b in basis):
                found.append(p)
        basis.extend(found)
    return BasisReport(name, max_size, tuple(sorted(basis, key=Permutation.sort_key)), examined)


def planar_basis(ceiling: int = 8) -> BasisReport:
    return compute_basis(planar_bad, ceiling, "planar")


@functools.lru_cache(maxsize=None)
def length_basis(n: int, ceiling: int | None = None) -> BasisReport:
    ceiling = 2 * n if ceiling is None else ceiling
    return compute_basis(length_at_least(n), ceiling, f"max-length:{n}")


def _planar_char_ok(p: Permutation) -> bool:
    g = underlying_undirected(bruhat_graph(p))
    return is_planar(g) == planar_by_characterization(p)


def verify_planar_characterization(max_m: int, workers: int = 1) -> VerificationReport:
    checked, bad = _scan(_planar_char_ok, _perms_up_to_size(max_m), workers)
    return VerificationReport("planar-char", {"max_m": max_m}, checked, bad)


def _cube_ok(p: Permutation) -> bool:
    g = bruhat_graph(p)
    if not is_planar(underlying_undirected(g)):
        return True
    length = coxeter_length(p)
    return length <= 3 and is_hypercube(g, length)


def verify_cube_classification(max_m: int, workers: int = 1) -> VerificationReport:
    checked, bad = _scan(_cube_ok, _perms_up_to_size(max_m), workers)
    return VerificationReport("cube-class", {"max_m": max_m}, checked, bad)


def _max_pattern_length(p: Permutation, size: int) -> int:
    # patterns only lose inversions when entries are dropped, so the largest
    # allowed size attains the maximum
    size = min(size, len(p))
    return max(coxeter_length([p[i] for i in idx])
               for idx in itertools.combinations(range(len(p)), size))


def _length_basis_ok(n: int, basis: tuple[Permutation, ...] | None, p: Permutation) -> bool:
    if basis is None:
        witnessed = _max_pattern_length(p, 2 * n) >= n
    else:
        witnessed = any(contains_pattern(b, p) for b in basis)
    return (coxeter_length(p) >= n) == witnessed


def verify_length_basis(
    n: int, max_m: int, use_basis: bool = False, workers: int = 1
) -> VerificationReport:
    """
    For every p of size <= ``max_m``: length(p) >= n exactly when p contains
    a pattern of size <= 2n and length >= n.

    With ``use_basis`` the witness search goes through the minimal basis for
    "length >= n" instead of scanning subsequences.
    """
    basis = length_basis(n).basis if use_basis else None
    check = functools.partial(_length_basis_ok, n, basis)
    checked, bad = _scan(check, _perms_up_to_size(max_m), workers)
    return VerificationReport("length-basis", {"n": n, "max_m": max_m}, checked, bad)


def verify_sharpness(n: int) -> VerificationReport:
    """2143...(2n)(2n-1) has length n and every proper pattern of it is shorter."""
    sigma = Permutation(v for i in range(1, n + 1) for v in (2 * i, 2 * i - 1))
    bad = [] if coxeter_length(sigma) == n else [sigma]
    checked = 0
    for size in range(1, 2 * n):
        for idx in itertools.combinations(range(2 * n), size):
            checked += 1
            tau = flatten([sigma[i] for i in idx])
            if coxeter_length(tau) >= n:
                bad.append(tau)
    return VerificationReport("sharpness", {"n": n}, checked, tuple(dict.fromkeys(bad)))


def _deletions(p: Permutation) -> Iterable[Permutation]:
    for i in range(len(p)):
        yield flatten(p[:i] + p[i + 1:])


def _fixed_point_ok(n: int, p: Permutation) -> bool:
    # some strictly smaller pattern has length >= n iff some one-entry deletion does
    strict = any(coxeter_length(q) >= n for q in _deletions(p))
    return (coxeter_length(p) >= n) == strict


def verify_fixed_point_lemma(n: int, max_m: int) -> VerificationReport:
    family = (p for p in _perms_up_to_size(max_m, 2 * n + 1)
              if any(v == i for i, v in enumerate(p, 1)))
    checked, bad = _scan(functools.partial(_fixed_point_ok, n), family)
    return VerificationReport("lemma-fixed-point", {"n": n, "max_m": max_m}, checked, bad)


def _cycle_ok(p: Permutation) -> bool:
    return any(coxeter_length(q) >= len(p) - 2 for q in _deletions(p))


def verify_cycle_lemma(max_m: int) -> VerificationReport:
    family = (p for p in _perms_up_to_size(max_m, 2) if len(cycle_decomposition(p)) == 1)
    checked, bad = _scan(_cycle_ok, family)
    return VerificationReport("lemma-m-cycle", {"max_m": max_m}, checked, bad)


def _disjoint_cycles_ok(n: int, p: Permutation) -> bool:
    return _max_pattern_length(p, len(p) - 2) >= n


def verify_disjoint_cycles_lemma(n: int, max_m: int) -> VerificationReport:
    """Fixed-point-free permutations with at least two cycles and size > 2n
    contain a pattern two entries shorter with length >= n."""
    def in_family(p: Permutation) -> bool:
        cycles = cycle_decomposition(p)
        return len(cycles) >= 2 and all(len(c) >= 2 for c in cycles)

    family = filter(in_family, _perms_up_to_size(max_m, 2 * n + 1))
    checked, bad = _scan(functools.partial(_disjoint_cycles_ok, n), family)
    return VerificationReport("lemma-disjoint-cycles", {"n": n, "max_m": max_m}, checked, bad)


def verify_lemmas(n: int, max_m: int) -> VerificationReport:
    parts = [
        verify_fixed_point_lemma(n, max_m),
        verify_cycle_lemma(max_m),
        verify_disjoint_cycles_lemma(n, max_m),
    ]
    return VerificationReport(
        "lemmas",
        {"n": n, "max_m": max_m},
        sum(r.checked for r in parts),
        tuple(c for r in parts for c in r.counterexamples),
        tuple(r.summary() for r in parts),
    )


def planar_count_formula(m: int, length: int) -> int:
    """Closed form for the number of planar-graph permutations of S_m with the given length."""
    if length == 0:
        return 1
    if length == 1:
        return m - 1
    if length == 2:
        return (m + 1) * (m - 2) // 2
    if length == 3:
        return (m + 4) * (m - 1) * (m - 3) // 6
    raise ValueError("planar Bruhat graphs only occur for lengths 0..3")


def verify_counts(max_m: int) -> VerificationReport:
    """
    Count planar-graph permutations in S_m by length and compare with the
    closed forms. When ``m < length`` the polynomials go negative (m=1,
    length 2 and m=2, length 3); there the expected count is 0.
    """
    rows = []
    checked = 0
    for m in range(1, max_m + 1):
        counts = [0, 0, 0, 0]
        for p in permutations_up_to(3, m):
            checked += 1
            if planar_by_characterization(p):
                counts[coxeter_length(p)] += 1
        for length in range(4):
            expected = planar_count_formula(m, length) if m >= length else 0
            if counts[length] != expected:
                rows.append((m, length, counts[length], expected))
    return VerificationReport("counts", {"max_m": max_m}, checked, tuple(rows))


def _leq_agrees(pair: tuple[Permutation, Permutation]) -> bool:
    return bruhat_leq(*pair) == bruhat_leq_oracle(*pair)


def verify_bruhat_oracle(max_m: int) -> VerificationReport:
    pairs = (
        (u, v)
        for m in range(1, max_m + 1)
        for u in all_permutations(m)
        for v in all_permutations(m)
    )
    checked, bad = _scan(_leq_agrees, pairs)
    return VerificationReport("bruhat-oracle", {"max_m": max_m}, checked, bad)


def random_graph(rng: random.Random, max_vertices: int = 8) -> UndirectedGraph:
    n = rng.randint(1, max_vertices)
    density = rng.uniform(0.2, 0.9)
    return UndirectedGraph.from_pairs(
        n, ((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density)
    )


def planarity_corpus(seed: int = 0, random_count: int = 50) -> list[tuple[str, UndirectedGraph]]:
    """Small graphs on which the fast test and the subdivision oracle must agree."""
    corpus = [(f"B({p})", underlying_undirected(bruhat_graph(p))) for p in all_permutations(4)]
    corpus += [(f"K{n}", complete_graph(n)) for n in range(1, 7)]
    corpus += [(f"K{a},{b}", complete_bipartite_graph(a, b))
               for a in range(1, 5) for b in range(1, 5)]
    corpus += [(f"Q{d}", hypercube_graph(d)) for d in range(5)]
    rng = random.Random(seed)
    corpus += [(f"random#{i}", random_graph(rng)) for i in range(random_count)]
    return corpus


def _planarity_agrees(item: tuple[str, UndirectedGraph]) -> bool:
    return is_planar(item[1]) == kuratowski_oracle(item[1]).planar


def verify_planarity_oracle(seed: int = 0, random_count: int = 50) -> VerificationReport:
    checked, bad = _scan(_planarity_agrees, planarity_corpus(seed, random_count))
    return VerificationReport(
        "planarity-oracle", {"seed": seed, "random": random_count}, checked,
        tuple((name,) for name, _ in bad),
    )
