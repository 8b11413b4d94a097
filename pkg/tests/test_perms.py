import itertools

import pytest
from hypothesis import given, strategies as st

from bruhat_planar.perms import (
    Permutation,
    PermutationError,
    Transposition,
    absolute_length,
    all_permutations,
    apply_transposition,
    avoids_all,
    contains_pattern,
    coxeter_length,
    cycle_decomposition,
    embeddings,
    from_cycles,
    identity,
    parse_one_line,
    permutations_up_to,
)
from oracles import bfs_word_length, brute_contains, brute_embeddings, compose, transposition_word

P = parse_one_line


def perms(max_size=7):
    return st.integers(1, max_size).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(Permutation)
    )


@pytest.mark.parametrize("text, word", [
    ("3412", (3, 4, 1, 2)),
    ("1", (1,)),
    ("10,2,3,4,5,6,7,8,9,1", (10, 2, 3, 4, 5, 6, 7, 8, 9, 1)),
    (" 2, 1 ", (2, 1)),
])
def test_parse(text, word):
    p = parse_one_line(text)
    assert p.word == word
    assert p.size == len(word)


@pytest.mark.parametrize("text", ["", "1223", "0", "124", "21a", "1,,2", "12345678910", "3,1"])
def test_parse_rejects(text):
    with pytest.raises(PermutationError):
        parse_one_line(text)


def test_str_round_trip():
    assert str(P("3412")) == "3412"
    big = P("10,2,3,4,5,6,7,8,9,1")
    assert str(big) == "10,2,3,4,5,6,7,8,9,1"
    assert parse_one_line(str(big)) == big


@pytest.mark.parametrize("word, length", [("3412", 4), ("1234", 0), ("321", 3)])
def test_coxeter_length(word, length):
    assert coxeter_length(P(word)) == length


@pytest.mark.parametrize("word, length", [("3412", 2), ("123", 0), ("23451", 4)])
def test_absolute_length(word, length):
    assert absolute_length(P(word)) == length


@pytest.mark.parametrize("n", range(1, 6))
def test_lengths_match_shortest_factorizations(n):
    for p in all_permutations(n):
        assert coxeter_length(p) == bfs_word_length(p, adjacent_only=True)
        assert absolute_length(p) == bfs_word_length(p, adjacent_only=False)


@pytest.mark.parametrize("word, cycles", [
    ("3412", [[1, 3], [2, 4]]),
    ("123", [[1], [2], [3]]),
    ("23451", [[1, 2, 3, 4, 5]]),
])
def test_cycle_decomposition(word, cycles):
    assert cycle_decomposition(P(word)) == cycles


@pytest.mark.parametrize("t, p, expected", [
    ((1, 3), "123", "321"),
    ((1, 2), "21", "12"),
    ((2, 4), "3412", "3214"),
])
def test_apply_transposition(t, p, expected):
    got = apply_transposition(Transposition(*t), P(p))
    assert got == P(expected)
    assert got == compose(transposition_word(len(p), *t), P(p))


def test_apply_transposition_out_of_range():
    with pytest.raises(PermutationError):
        apply_transposition(Transposition(2, 4), P("321"))


def test_transposition_needs_ordered_pair():
    with pytest.raises(PermutationError):
        Transposition(3, 3)


@pytest.mark.parametrize("pattern, target, expected", [
    ("3412", "5736241", [(1, 2, 3, 6), (1, 2, 5, 6), (1, 4, 5, 6)]),
    ("3412", "135246", []),
    ("1", "21", [(1,), (2,)]),
])
def test_embeddings(pattern, target, expected):
    assert embeddings(P(pattern), P(target)) == expected


def test_embeddings_pattern_too_large():
    with pytest.raises(PermutationError):
        embeddings(P("123"), P("21"))


@pytest.mark.parametrize("pattern, target, expected", [
    ("321", "3412", False),
    ("321", "1432", True),
    ("2143", "2143", True),
    ("4321", "321", False),
])
def test_contains_pattern(pattern, target, expected):
    assert contains_pattern(P(pattern), P(target)) is expected


@pytest.mark.parametrize("target, patterns, expected", [
    ("2143", ["321", "3412"], True),
    ("3412", ["321", "3412"], False),
    ("54321", [], True),
])
def test_avoids_all(target, patterns, expected):
    assert avoids_all(P(target), [P(q) for q in patterns]) is expected


def test_embeddings_agree_with_brute_force():
    for n in range(1, 7):
        targets = list(all_permutations(n))
        for k in range(1, min(n, 4) + 1):
            for pattern in all_permutations(k):
                for target in targets:
                    assert embeddings(pattern, target) == brute_embeddings(pattern, target)


def test_containment_is_a_partial_order():
    by_size = {n: list(all_permutations(n)) for n in range(1, 6)}
    everything = [p for n in by_size for p in by_size[n]]
    contains = {(a, b): brute_contains(a, b) for a in everything for b in everything}
    for (a, b), c in contains.items():
        assert contains_pattern(a, b) is c
    for p in everything:
        assert contains[p, p]
    for n, group in by_size.items():
        for a, b in itertools.permutations(group, 2):
            assert not contains[a, b]
    for a, b, c in itertools.product(everything, repeat=3):
        if contains[a, b] and contains[b, c]:
            assert contains[a, c]


def test_permutations_up_to_matches_filter():
    for n in range(1, 7):
        for k in range(5):
            expected = [p for p in all_permutations(n) if coxeter_length(p) <= k]
            assert list(permutations_up_to(k, n)) == expected


def test_identity_and_inverse():
    assert identity(4) == P("1234")
    assert P("3412").inverse() == P("3412")
    assert P("2341").inverse() == P("4123")


@given(perms())
def test_absolute_length_at_most_length(p):
    assert 0 <= absolute_length(p) <= coxeter_length(p)


@given(perms())
def test_length_bounds(p):
    n = p.size
    length = coxeter_length(p)
    assert 0 <= length <= n * (n - 1) // 2
    assert (length == 0) == (p == identity(n))
    assert (length == n * (n - 1) // 2) == (p.word == tuple(range(n, 0, -1)))


@given(perms(), st.data())
def test_transposition_changes_length_parity(p, data):
    if p.size < 2:
        return
    a = data.draw(st.integers(1, p.size - 1))
    b = data.draw(st.integers(a + 1, p.size))
    t = Transposition(a, b)
    q = apply_transposition(t, p)
    assert (coxeter_length(q) - coxeter_length(p)) % 2 == 1
    assert apply_transposition(t, q) == p


@given(perms())
def test_cycles_round_trip(p):
    cycles = cycle_decomposition(p)
    assert from_cycles(p.size, cycles) == p
    assert sorted(x for c in cycles for x in c) == list(range(1, p.size + 1))
    assert len(cycles) == p.size - absolute_length(p)
    assert [c[0] for c in cycles] == sorted(c[0] for c in cycles)
    assert all(c[0] == min(c) for c in cycles)


def test_permutations_are_hashable_values():
    assert {P("21"), Permutation([2, 1])} == {P("21")}
    assert sorted([P("312"), P("21"), P("123")], key=Permutation.sort_key) == [
        P("21"), P("123"), P("312")]
