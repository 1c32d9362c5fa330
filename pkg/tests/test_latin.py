"""Stabilizing conjugators and the product families they generate."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycred import (Alphabet, concat, cyc_product, cyc_reduce,
                    cyclic_shift_between, find_stabilizing_conjugator,
                    inverse, is_cyclically_reduced, is_reduced, latin_pairs,
                    power, rotate)
from cycred.syntax import parse_compact

from conftest import AB2, AB3, W, F, reduced_words


def _stabilized(u, s, w, n):
    return concat(concat(u, power(s, n)), concat(w, power(inverse(s), n)))


def test_input_validation():
    one_gen = Alphabet("x")
    with pytest.raises(ValueError):
        find_stabilizing_conjugator(parse_compact("x", one_gen),
                                    parse_compact("x", one_gen))
    with pytest.raises(ValueError):
        find_stabilizing_conjugator(W("1", AB2), W("x", AB2))
    with pytest.raises(ValueError):
        find_stabilizing_conjugator(W("xX", AB2), W("x", AB2))
    with pytest.raises(ValueError):
        find_stabilizing_conjugator(W("x", AB2), W("x", AB3))


@given(reduced_words(AB2, min_len=1, max_len=7),
       reduced_words(AB2, min_len=1, max_len=7))
def test_conjugator_contract_two_generators(u, w):
    s = find_stabilizing_conjugator(u, w)
    assert len(s) <= 2
    for n in range(1, 5):
        assert is_cyclically_reduced(_stabilized(u, s, w, n))


@given(reduced_words(AB3, min_len=1, max_len=6),
       reduced_words(AB3, min_len=1, max_len=6))
def test_conjugator_contract_three_generators(u, w):
    s = find_stabilizing_conjugator(u, w)
    assert len(s) <= 2
    for n in range(1, 5):
        assert is_cyclically_reduced(_stabilized(u, s, w, n))


def test_conjugator_determinism():
    u, w = W("xy", AB2), W("yy", AB2)
    assert find_stabilizing_conjugator(u, w) == find_stabilizing_conjugator(u, w)


def test_latin_pairs_fixture():
    u, w = W("xy", AB2), W("yy", AB2)
    pairs = latin_pairs(u, w, 2)
    assert [F(p.v) for p in pairs] == ["YXXyyx", "YXXXyyxx"]
    assert [F(p.v_prime) for p in pairs] == ["XyyxYX", "XXyyxxYX"]
    assert [p.n for p in pairs] == [1, 2]


@given(reduced_words(AB2, min_len=1, max_len=6),
       reduced_words(AB2, min_len=1, max_len=6), st.integers(0, 4))
def test_latin_pairs_contract(u, w, count):
    pairs = latin_pairs(u, w, count)
    assert len(pairs) == count
    core = cyc_reduce(w)[0].core
    lengths = []
    for p in pairs:
        assert is_cyclically_reduced(p.v)
        assert p.v_prime == rotate(p.v, len(u))
        assert cyc_product(u, p.v) == core
        assert cyc_product(p.v_prime, u) == core
        lengths.append(len(p.v))
    assert lengths == sorted(set(lengths))


def test_latin_pairs_count_validation():
    u, w = W("x", AB2), W("y", AB2)
    with pytest.raises(ValueError):
        latin_pairs(u, w, -1)
    with pytest.raises(ValueError):
        latin_pairs(u, w, 1.5)
    assert latin_pairs(u, w, 0) == []


def test_one_sided_counterexamples():
    # left division solvable, two-sided chain fails
    u, w = W("xy", AB2), W("yy", AB2)
    v2 = W("yX", AB2)
    assert cyc_product(v2, u) == w
    assert F(cyc_product(u, cyc_product(inverse(u), w))) == "xyXy"

    u, w = W("xy", AB2), W("xx", AB2)
    v1 = W("Yx", AB2)
    assert cyc_product(u, v1) == w
    assert F(cyc_product(cyc_product(w, inverse(u)), u)) == "xYxy"

    u, w = W("yxy", AB2), W("yXy", AB2)
    v = W("XX", AB2)
    assert F(cyc_product(u, v)) == "yxyXX"
    assert F(cyc_product(v, u)) == "XXyxy"
    assert cyc_product(u, v) != w and cyc_product(v, u) != w
    assert cyc_product(u, v) != cyc_product(v, u)
