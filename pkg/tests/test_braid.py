from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, settings

from heckebraid.braid import (BraidWord, component_count, delta, delta_inverse, inverse,
                              is_knot, parse, positive_lift, read_braid_file, serialize,
                              torus, torus_is_knot, weaving, write_braid_file)
from heckebraid.hecke import is_trivial, represent, single_unit_coordinate
from heckebraid.permutation import Permutation, all_permutations, length, to_index

from conftest import braids


def test_parse_examples():
    assert parse("1 1 1", n=2).letters == ((1, 1),) * 3
    assert parse("1 -2 1 -2", n=3).to_ints() == [1, -2, 1, -2]
    assert parse("1, -2,3").n == 4
    assert parse("", n=3).letters == ()


@pytest.mark.parametrize("text,n", [("0", 3), ("3", 3), ("1 x", 3), ("", None), ("-3", 2)])
def test_parse_errors(text, n):
    with pytest.raises(ValueError):
        parse(text, n=n)


@settings(max_examples=200, derandomize=True)
@given(braids())
def test_serialize_roundtrip(b):
    assert parse(serialize(b), n=b.n) == b
    assert read_braid_file(write_braid_file(b)) == b


def test_braid_file_comments():
    b = read_braid_file("# note\nn=3\n1 -2\n")
    assert b == BraidWord(3, ((1, 1), (2, -1)))
    with pytest.raises(ValueError):
        read_braid_file("1 2\n")


def test_inverse_examples():
    assert inverse(parse("1", n=2)).to_ints() == [-1]
    assert inverse(parse("1 2", n=3)).to_ints() == [-2, -1]
    assert BraidWord(3, ((1, 1),)) ** -2 == parse("-1 -1", n=3)


@settings(max_examples=200, derandomize=True)
@given(braids())
def test_inverse_cancels_in_hecke(b):
    assert is_trivial(represent(b * inverse(b)))
    assert is_trivial(represent(inverse(b) * b))


def test_positive_lift_examples():
    assert positive_lift(Permutation.identity(4)).letters == ()
    assert positive_lift(Permutation([2, 1, 3])).to_ints() == [1]
    d = positive_lift(Permutation([3, 2, 1]))
    assert len(d) == 3
    assert represent(d) == represent(parse("1 2 1", n=3))


def test_positive_lift_is_reduced_and_hits_unit():
    for n in (2, 3, 4):
        for p in all_permutations(n):
            b = positive_lift(p)
            assert len(b) == length(p)
            assert b.underlying_permutation() == p
            assert single_unit_coordinate(represent(b)) == to_index(p)


def test_delta():
    assert delta(2).to_ints() == [1]
    assert len(delta(5)) == 10
    printed = parse("-4 -3 -2 -1 -4 -3 -2 -4 -3 -4", n=5)
    assert represent(printed) == represent(delta_inverse(5))
    for n in range(2, 7):
        assert delta(n).underlying_permutation() == Permutation.longest(n)
        assert is_trivial(represent(delta(n) * delta_inverse(n)))


def test_torus_and_weaving():
    assert torus(2, 3) == parse("1 1 1", n=2)
    assert len(torus(6, 41)) == 205
    assert weaving(5, 2).to_ints() == [1, -2, 3, -4] * 2
    for p in range(2, 7):
        for q in range(1, 9):
            assert len(torus(p, q)) == len(weaving(p, q)) == (p - 1) * q
            assert is_knot(torus(p, q)) == torus_is_knot(p, q) == (gcd(p, q) == 1)
    with pytest.raises(ValueError):
        torus(1, 3)


def test_underlying_permutation():
    assert parse("1 1", n=2).underlying_permutation().is_identity()
    assert component_count(torus(3, 4)) == 1
    assert [len(c) for c in parse("1 2", n=3).underlying_permutation().cycles()] == [3]
    assert component_count(BraidWord(3)) == 3


def test_invalid_letters():
    with pytest.raises(ValueError):
        BraidWord(3, ((3, 1),))
    with pytest.raises(ValueError):
        BraidWord(3, ((1, 2),))
    with pytest.raises(ValueError):
        BraidWord(0)
