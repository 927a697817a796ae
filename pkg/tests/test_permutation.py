import random

import pytest
from hypothesis import given

from conftest import permutations_of
from linpique.modarith import factorize, unit_group
from linpique.permutation import (
    Permutation,
    PermutationError,
    automorphism_permutation,
    compose,
    conjugate,
    cycle_decomposition,
    cycle_type,
    fixed_point_count,
    format_cycles,
    inverse,
    parse_cycles,
)


def P(*images):
    return Permutation(images)


def test_rejects_non_bijection():
    with pytest.raises(PermutationError):
        P(0, 0, 1)


def test_compose_left_to_right():
    f = parse_cycles("(0 1)", 3)
    g = parse_cycles("(1 2)", 3)
    h = compose(f, g)
    assert h.images == (2, 0, 1)
    assert format_cycles(h) == "(0 2 1)"


def test_compose_identity_and_inverse():
    g = parse_cycles("(0 2 1)", 3)
    e = Permutation.identity(3)
    assert compose(e, g) == g
    assert compose(g, inverse(g)) == e


def test_compose_degree_mismatch():
    with pytest.raises(PermutationError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_inverse_examples():
    assert inverse(Permutation.identity(5)) == Permutation.identity(5)
    assert inverse(parse_cycles("(0 1 2)", 3)) == parse_cycles("(0 2 1)", 3)
    rng = random.Random(7)
    for _ in range(100):
        images = list(range(16))
        rng.shuffle(images)
        f = Permutation(tuple(images))
        assert compose(f, inverse(f)).is_identity()


def test_conjugate_examples():
    s3 = automorphism_permutation(3, 16)
    p = parse_cycles("(3 11)(7 15)", 16)
    assert conjugate(s3, p) == automorphism_permutation(11, 16)
    s5 = automorphism_permutation(5, 16)
    assert conjugate(s5, p) == s5
    assert conjugate(s3, Permutation.identity(16)) == s3


@given(permutations_of(9), permutations_of(9))
def test_conjugate_contract_and_cycle_type(s, p):
    c = conjugate(s, p)
    assert all(c(p(x)) == p(s(x)) for x in range(9))
    assert cycle_type(c) == cycle_type(s)


def test_cycle_decomposition_examples():
    assert cycle_decomposition(automorphism_permutation(3, 8)) == [(1, 3), (2, 6), (5, 7)]
    assert cycle_decomposition(Permutation.identity(6)) == []
    assert cycle_decomposition(automorphism_permutation(3, 16)) == [
        (1, 3, 9, 11), (2, 6), (4, 12), (5, 15, 13, 7), (10, 14)
    ]


def test_fixed_point_count_examples():
    assert fixed_point_count(automorphism_permutation(9, 16)) == 8
    assert fixed_point_count(Permutation.identity(16)) == 16
    assert fixed_point_count(automorphism_permutation(4, 5)) == 1


@given(permutations_of(12))
def test_fixed_points_complement_cycles(s):
    moved = sum(len(c) for c in cycle_decomposition(s))
    assert fixed_point_count(s) == s.degree - moved


def test_cycle_type_examples():
    assert cycle_type(automorphism_permutation(3, 8)) == (2, 2, 2, 1, 1)
    assert cycle_type(Permutation.identity(4)) == (1, 1, 1, 1)
    assert cycle_type(automorphism_permutation(2, 5)) == (4, 1)


def test_automorphism_permutation_examples():
    assert format_cycles(automorphism_permutation(3, 8)) == "(1 3)(2 6)(5 7)"
    assert automorphism_permutation(1, 11).is_identity()
    p5 = automorphism_permutation(5, 16)
    assert format_cycles(p5) == "(1 5 9 13)(2 10)(3 15 11 7)(6 14)"
    assert fixed_point_count(p5) == 4


def test_automorphism_permutation_rejects_non_unit():
    with pytest.raises(ValueError):
        automorphism_permutation(2, 8)


def test_format_cycles():
    assert format_cycles(Permutation.identity(8)) == "(1)"
    assert format_cycles(automorphism_permutation(7, 8)) == "(1 7)(2 6)(3 5)"
    assert format_cycles(Permutation.identity(1)) == "(1)"


def test_parse_cycles():
    assert parse_cycles("(1 3)(2 6)(5 7)", 8) == automorphism_permutation(3, 8)
    assert parse_cycles("(1)", 8).is_identity()
    assert parse_cycles("", 4).is_identity()
    assert parse_cycles("(1, 3)", 4) == parse_cycles("(1 3)", 4)


@pytest.mark.parametrize("text", ["(1 2", "(1 2)(2 3)", "(1 9)", "(a b)", "()", "1 2"])
def test_parse_cycles_errors(text):
    with pytest.raises(PermutationError):
        parse_cycles(text, 8)


@given(permutations_of(16))
def test_format_parse_roundtrip(s):
    assert parse_cycles(format_cycles(s), 16) == s


def _is_power_of(x, p):
    while x % p == 0:
        x //= p
    return x == 1


def test_fixed_point_counts_are_prime_powers():
    for q in range(2, 513):
        parts = factorize(q).parts
        if len(parts) != 1:
            continue
        p = parts[0][0]
        for u in unit_group(q):
            assert _is_power_of(fixed_point_count(automorphism_permutation(u, q)), p)
