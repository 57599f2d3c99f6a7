from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from heckebraid.permutation import (MAX_STRANDS, Fenwick, Permutation, all_permutations,
                                    compare_lex, cycles, from_index, left_mul_transposition,
                                    lehmer_code, length, right_mul_transposition, to_index)


def P(text):
    return Permutation.parse(text)


def brute_lehmer(w):
    return tuple(sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w)))


@st.composite
def perms(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    return Permutation(draw(st.permutations(range(1, n + 1))))


def test_lehmer_examples():
    assert lehmer_code(Permutation.identity(4)) == (0, 0, 0, 0)
    assert lehmer_code(P("3 1 2")) == (2, 0, 0)
    assert lehmer_code(P("3 2 1")) == (2, 1, 0)


def test_index_examples():
    assert to_index(Permutation.identity(7)) == 0
    assert to_index(P("3 2 1")) == 5
    assert to_index(P("2 1 3")) == 2
    assert from_index(0, 5) == Permutation.identity(5)
    assert from_index(5, 3) == P("3 2 1")


def test_from_index_out_of_range():
    with pytest.raises(ValueError):
        from_index(6, 3)
    with pytest.raises(ValueError):
        from_index(-1, 3)


def test_roundtrip_sigma6_and_lex_enumeration():
    words = list(itertools.permutations(range(1, 7)))
    for j, w in enumerate(words):
        p = Permutation(w)
        assert to_index(p) == j
        assert from_index(j, 6) == p


def test_length_examples():
    assert length(Permutation.identity(5)) == 0
    assert length(P("3 2 1")) == 3
    for n in range(1, 9):
        assert length(Permutation.longest(n)) == n * (n - 1) // 2


def test_transposition_examples():
    e = Permutation.identity(3)
    assert left_mul_transposition(1, e) == P("2 1 3")
    assert left_mul_transposition(1, P("2 1 3")) == e
    assert left_mul_transposition(2, P("3 1 2")) == P("2 1 3")
    assert right_mul_transposition(e, 1) == P("2 1 3")
    assert right_mul_transposition(P("3 1 2"), 2) == P("3 2 1")
    with pytest.raises(ValueError):
        left_mul_transposition(3, e)
    with pytest.raises(ValueError):
        right_mul_transposition(e, 0)


def test_transpositions_match_composition():
    for p in all_permutations(4):
        for i in (1, 2, 3):
            s = Permutation.transposition(4, i)
            assert left_mul_transposition(i, p) == s * p
            assert right_mul_transposition(p, i) == p * s


def test_cycles_examples():
    assert cycles(Permutation.identity(3)) == [[1], [2], [3]]
    assert [len(c) for c in cycles(P("3 1 2"))] == [3]
    fig = P("2 3 1 5 6 7 4 9 10 8")
    assert sorted(len(c) for c in cycles(fig)) == [3, 3, 4]


def test_compare_lex_examples():
    e = Permutation.identity(3)
    assert all(compare_lex(e, p) < 0 for p in all_permutations(3)[1:])
    assert compare_lex(P("1 3 2"), P("2 1 3")) < 0
    assert to_index(P("1 3 2")) < to_index(P("2 1 3"))
    ps = all_permutations(5)
    for p, r in itertools.product(ps, repeat=2):
        assert compare_lex(p, r) == (to_index(p) > to_index(r)) - (to_index(p) < to_index(r))


def test_strand_bound():
    with pytest.raises(ValueError):
        Permutation.identity(MAX_STRANDS + 1)
    big = Permutation.longest(MAX_STRANDS)
    assert to_index(big) < 2 ** 64
    assert from_index(to_index(big), MAX_STRANDS) == big


def test_invalid_words():
    for bad in ([1, 1], [0, 1], [2, 3], []):
        with pytest.raises(ValueError):
            Permutation(bad)


def test_fenwick_select():
    f = Fenwick(6)
    f.add(3, -1)
    assert [f.select(k) for k in range(1, 6)] == [1, 2, 4, 5, 6]
    assert f.prefix(4) == 3


@settings(max_examples=300, derandomize=True)
@given(perms())
def test_lehmer_properties(p):
    code = lehmer_code(p)
    assert code == brute_lehmer(p.word)
    assert all(0 <= c <= p.n - 1 - i for i, c in enumerate(code))
    assert length(p) == sum(code)
    assert from_index(to_index(p), p.n) == p


@settings(max_examples=300, derandomize=True)
@given(perms(max_n=8), st.data())
def test_length_changes_by_one(p, data):
    if p.n < 2:
        return
    i = data.draw(st.integers(1, p.n - 1))
    assert abs(length(left_mul_transposition(i, p)) - length(p)) == 1
    assert right_mul_transposition(right_mul_transposition(p, i), i) == p


@settings(max_examples=200, derandomize=True)
@given(perms(), perms())
def test_group_laws(p, r):
    if p.n != r.n:
        return
    assert (p * r).inverse() == r.inverse() * p.inverse()
    assert (p * p.inverse()).is_identity()
    assert p.left_descents() == p.inverse().right_descents()


def test_descents():
    p = P("3 1 2")
    assert p.right_descents() == frozenset({1})
    # value 2 comes after 3, and 1 comes before 2: left descent only at 2
    assert p.left_descents() == frozenset({2})


def test_random_large_roundtrip():
    rng = random.Random(3)
    for n in (12, 17, 20):
        for _ in range(50):
            w = list(range(1, n + 1))
            rng.shuffle(w)
            p = Permutation(w)
            assert from_index(to_index(p), n) == p
