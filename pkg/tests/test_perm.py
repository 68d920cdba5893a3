import random

import pytest
from hypothesis import given, strategies as st

from bismash.perm import (
    Permutation,
    compose,
    fixed_points,
    from_cycles,
    inverse,
    is_involution,
    parse_permutation,
    to_cycles,
)


def random_perm(n, rng):
    images = list(range(1, n))
    rng.shuffle(images)
    return Permutation((0, *images))


def test_compose_identity():
    x = from_cycles(6, [(1, 2), (3, 4, 5)])
    e = Permutation.identity(6)
    assert compose(e, x) == x
    assert compose(x, e) == x


def test_compose_shift_with_transposition():
    # a^{-1} * (1 3) in degree 3 lands on (1 2); cross-checked pointwise.
    a_inv = Permutation.shift_power(3, -1)
    x = from_cycles(3, [(1, 3)])
    got = compose(a_inv, x)
    assert got == from_cycles(3, [(1, 2)])
    for i in range(1, 4):
        assert got(i) == (a_inv(x(i)))


def test_compose_shifted_conjugate():
    # a^4 * ((1 2)(3 4 5) * a) = (1 5 4) in degree 6
    a = Permutation.standard_cycle(6)
    a4 = Permutation.shift_power(6, 4)
    x = from_cycles(6, [(1, 2), (3, 4, 5)])
    assert compose(a4, compose(x, a)) == from_cycles(6, [(1, 5, 4)])


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_inverse_basics():
    assert inverse(Permutation.identity(5)) == Permutation.identity(5)
    x = from_cycles(6, [(1, 2), (3, 4, 5)])
    assert inverse(x) == from_cycles(6, [(1, 2), (3, 5, 4)])


def test_inverse_involutive_random():
    rng = random.Random(7)
    for n in range(2, 11):
        for _ in range(50):
            x = random_perm(n, rng)
            assert inverse(inverse(x)) == x
            assert compose(x, inverse(x)) == Permutation.identity(n)


def test_from_cycles_one_line():
    x = from_cycles(6, [(1, 2), (3, 4, 5)])
    assert x.one_line() == (2, 1, 4, 5, 3, 6)
    assert from_cycles(4, []) == Permutation.identity(4)


def test_from_cycles_rejects_bad_input():
    with pytest.raises(ValueError):
        from_cycles(6, [(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        from_cycles(6, [(1, 7)])


def test_cycles_round_trip_random():
    rng = random.Random(11)
    for _ in range(1000):
        x = random_perm(9, rng)
        assert from_cycles(9, to_cycles(x)) == x


def test_to_cycles_canonical_form():
    x = from_cycles(16, [(9, 13, 1, 5), (11, 15, 3, 7)])
    assert to_cycles(x) == ((1, 5, 9, 13), (3, 7, 11, 15))
    assert str(x) == "(1 5 9 13)(3 7 11 15)"
    assert str(Permutation.identity(4)) == "()"


def test_fixed_points():
    assert fixed_points(Permutation.identity(5)) == [1, 2, 3, 4, 5]
    x = from_cycles(8, [(1, 5), (2, 6), (3, 7)])
    assert fixed_points(x) == [4, 8]
    y = from_cycles(16, [(1, 5, 9, 13), (3, 7, 11, 15)])
    assert fixed_points(y) == [2, 4, 6, 8, 10, 12, 14, 16]


def test_is_involution():
    assert is_involution(Permutation.identity(3))
    assert not is_involution(from_cycles(6, [(1, 2), (3, 4, 5)]))
    assert is_involution(from_cycles(8, [(1, 3), (2, 6), (5, 7)]))


def test_involution_iff_cycles_length_two():
    rng = random.Random(3)
    for _ in range(300):
        x = random_perm(8, rng)
        assert is_involution(x) == all(len(c) == 2 for c in to_cycles(x))


@given(st.integers(2, 8), st.randoms(use_true_random=False))
def test_bijectivity_preserved(n, rng):
    x = random_perm(n, rng)
    y = random_perm(n, rng)
    for z in (compose(x, y), inverse(x)):
        assert sorted(z.word) == list(range(n))


def test_compose_associative_exhaustive_small():
    # all triples in degree <= 5 (through the top-fixing embedding)
    import itertools

    for n in (3, 4, 5):
        elems = [
            Permutation((0, *images))
            for images in itertools.permutations(range(1, n))
        ]
        for x in elems:
            for y in elems:
                xy = compose(x, y)
                for z in elems:
                    assert compose(xy, z) == compose(x, compose(y, z))


def test_compose_associative_random_triples():
    rng = random.Random(19)
    for n in range(2, 11):
        for _ in range(60):
            x, y, z = (random_perm(n, rng) for _ in range(3))
            assert compose(compose(x, y), z) == compose(x, compose(y, z))


def test_parse_cycle_and_one_line():
    x = parse_permutation("(1 5 9 13)(3 7 11 15)", 16)
    assert x == from_cycles(16, [(1, 5, 9, 13), (3, 7, 11, 15)])
    y = parse_permutation("[5,2,7,4,1,6,3,8]")
    assert y.one_line() == (5, 2, 7, 4, 1, 6, 3, 8)
    assert parse_permutation("()", 5) == Permutation.identity(5)
    assert parse_permutation("(1, 2)(3, 4)", 5) == from_cycles(5, [(1, 2), (3, 4)])
    with pytest.raises(ValueError):
        parse_permutation("(1 2")
    with pytest.raises(ValueError):
        parse_permutation("(1 2)")  # needs degree


def test_call_is_one_indexed():
    x = from_cycles(6, [(1, 2), (3, 4, 5)])
    assert [x(i) for i in range(1, 7)] == [2, 1, 4, 5, 3, 6]
    with pytest.raises(ValueError):
        x(0)
    with pytest.raises(ValueError):
        x(7)
