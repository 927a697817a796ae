from math import gcd

import pytest
from hypothesis import given, strategies as st

from linpique.modarith import unit_group, unit_order
from linpique.permutation import fixed_point_count, format_cycles
from linpique.pique import (
    LinearPique,
    Word,
    inner_group,
    inner_group_is_cyclic,
    ldiv,
    mul,
    opposite,
    parse_pique,
    parse_word,
    rdiv,
    verify_quasigroup,
    word_eval,
    word_permutation,
)


def all_piques(n):
    return [LinearPique(n, r, l) for r in unit_group(n) for l in unit_group(n)]


def test_mul_examples():
    assert mul(LinearPique(5, 1, 2), 0, 1) == 2
    assert mul(LinearPique(4, 3, 3), 1, 1) == 2
    for n in range(2, 10):
        for P in all_piques(n):
            assert mul(P, 0, 0) == 0


def test_divisions():
    P = LinearPique(5, 1, 2)
    assert rdiv(P, 2, 1) == 0
    for n in range(2, 17):
        for P in all_piques(n):
            for x in range(n):
                for y in range(n):
                    assert rdiv(P, mul(P, x, y), y) == x
                    assert ldiv(P, y, mul(P, y, x)) == x


def test_verify_quasigroup_exhaustive():
    for n in range(2, 17):
        for P in all_piques(n):
            assert verify_quasigroup(P)


def test_non_unit_rejected():
    with pytest.raises(ValueError):
        LinearPique(8, 2, 1)
    with pytest.raises(ValueError):
        LinearPique(4, 1, 2)


@given(st.integers(2, 10**4), st.data())
def test_quasigroup_laws_sampled(n, data):
    units = [u for u in range(1, min(n, 200)) if gcd(u, n) == 1]
    P = LinearPique(n, data.draw(st.sampled_from(units)), data.draw(st.sampled_from(units)))
    x = data.draw(st.integers(0, n - 1))
    y = data.draw(st.integers(0, n - 1))
    assert ldiv(P, y, mul(P, y, x)) == x == rdiv(P, mul(P, x, y), y)
    assert mul(P, y, ldiv(P, y, x)) == x == mul(P, rdiv(P, x, y), y)


def test_opposite():
    assert opposite(LinearPique(8, 5, 3)) == LinearPique(8, 3, 5)
    P = LinearPique(5, 1, 2)
    assert opposite(opposite(P)) == P
    assert opposite(P).formula == "2x+y"


def test_parse_pique_forms():
    assert parse_pique("16:5:3") == LinearPique(16, 5, 3)
    assert parse_pique('{"modulus":16,"rho":5,"lambda":3}') == LinearPique(16, 5, 3)
    assert LinearPique.from_record(LinearPique(16, 5, 3).to_record()) == LinearPique(16, 5, 3)
    for bad in ("16:5", "x:1:1", "8:2:1", '{"modulus":8}'):
        with pytest.raises(ValueError):
            parse_pique(bad)


@pytest.mark.parametrize("text,ab", [
    ("R", (1, 0)), ("L", (0, 1)), ("RL", (1, 1)), ("RL2", (1, 2)), ("R^2L^-1", (2, -1)),
    ("R-1L2", (-1, 2)), ("rl3", (1, 3)), ("LRL", (1, 2)), ("1", (0, 0)), ("", (0, 0)),
    ("R2R-2", (0, 0)),
])
def test_parse_word(text, ab):
    assert parse_word(text).exponents == ab


@pytest.mark.parametrize("bad", ["X", "R^", "RL^a", "R L Q"])
def test_parse_word_errors(bad):
    with pytest.raises(ValueError):
        parse_word(bad)


def test_word_labels():
    assert Word(1, 2).label() == "RL²"
    assert Word(1, 2).label(unicode=False) == "RL2"
    assert Word(-1, 0).label() == "R⁻¹"
    assert parse_word(Word(3, -2).label(unicode=False)) == Word(3, -2)


def test_word_eval_examples():
    P = LinearPique(16, 5, 3)
    assert word_eval(P, parse_word("RL")) == 15
    assert word_eval(P, Word()) == 1
    assert word_eval(P, parse_word("RL2")) == 13
    assert fixed_point_count(word_permutation(P, parse_word("RL2"))) == 4
    assert word_eval(P, parse_word("R-1")) == 13  # 5 * 13 = 65 = 1 mod 16


def test_word_permutation_examples():
    P = LinearPique(16, 5, 3)
    assert fixed_point_count(word_permutation(P, parse_word("RL"))) == 2
    assert word_permutation(P, Word()).is_identity()
    assert format_cycles(word_permutation(LinearPique(8, 1, 3), parse_word("L"))) == "(1 3)(2 6)(5 7)"


@given(st.sampled_from([7, 8, 15, 16, 24, 45]), st.data(),
       st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20))
def test_word_eval_homomorphism(n, data, a1, b1, a2, b2):
    units = unit_group(n)
    P = LinearPique(n, data.draw(st.sampled_from(units)), data.draw(st.sampled_from(units)))
    w1, w2 = Word(a1, b1), Word(a2, b2)
    assert word_eval(P, w1 * w2) == word_eval(P, w1) * word_eval(P, w2) % n


def test_inner_group_examples():
    assert inner_group(LinearPique(8, 5, 3)) == {1, 3, 5, 7}
    assert inner_group(LinearPique(9, 1, 1)) == {1}
    assert inner_group(LinearPique(16, 9, 7)) == {1, 7, 9, 15}


def test_inner_group_is_word_image():
    for n in range(2, 25):
        for P in all_piques(n):
            image = {
                word_eval(P, Word(a, b))
                for a in range(unit_order(P.rho, n))
                for b in range(unit_order(P.lam, n))
            }
            G = inner_group(P)
            assert G == image
            assert 1 % n in G and all(pow(g, -1, n) in G for g in G)


def test_inner_group_is_cyclic_examples():
    assert not inner_group_is_cyclic(LinearPique(16, 9, 7))
    assert inner_group_is_cyclic(LinearPique(12, 1, 1))
    assert inner_group_is_cyclic(LinearPique(5, 1, 2))
