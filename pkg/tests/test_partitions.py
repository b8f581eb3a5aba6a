"""Partition enumeration and tableau counting, checked against brute force."""

from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussdeg.partitions import (
    add_rectangle,
    canonical,
    conjugate,
    enumerate_partitions,
    pad,
    syt_count_bruteforce,
    syt_count_hook,
    weight,
)

# p(0)..p(10)
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@st.composite
def partitions(draw, max_weight=10):
    total = draw(st.integers(min_value=0, max_value=max_weight))
    return draw(st.sampled_from(enumerate_partitions(total, max(total, 1))))


def test_canonical_strips_zeros_and_validates():
    assert canonical((3, 1, 0, 0)) == (3, 1)
    assert canonical(()) == ()
    assert canonical((0, 0)) == ()
    with pytest.raises(ValueError):
        canonical((1, 2))
    with pytest.raises(ValueError):
        canonical((2, -1))


def test_pad():
    assert pad((2, 1), 4) == (2, 1, 0, 0)
    assert pad((), 2) == (0, 0)
    with pytest.raises(ValueError):
        pad((1, 1, 1), 2)


def test_conjugate_known():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((4,)) == (1, 1, 1, 1)


def test_enumerate_known_listings():
    assert enumerate_partitions(0, 5) == [()]
    assert enumerate_partitions(0, 0) == [()]
    assert enumerate_partitions(2, 0) == []
    assert enumerate_partitions(3, 2) == [(3,), (2, 1)]
    assert enumerate_partitions(2, 4) == [(2,), (1, 1)]
    assert enumerate_partitions(4, 4) == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]


def test_enumerate_counts():
    for total, expected in enumerate(PARTITION_COUNTS):
        assert len(enumerate_partitions(total, max(total, 1))) == expected


def test_enumerate_rejects_negative():
    with pytest.raises(ValueError):
        enumerate_partitions(-1, 3)
    with pytest.raises(ValueError):
        enumerate_partitions(3, -1)


@given(
    total=st.integers(min_value=0, max_value=12),
    max_parts=st.integers(min_value=0, max_value=12),
)
def test_enumerate_is_valid_and_reverse_lex(total, max_parts):
    out = enumerate_partitions(total, max_parts)
    assert len(set(out)) == len(out)
    for lam in out:
        assert lam == canonical(lam)
        assert weight(lam) == total
        assert len(lam) <= max_parts
    assert out == sorted(out, reverse=True)


def test_add_rectangle():
    assert add_rectangle((2,), 2, 1) == (3, 1)
    assert add_rectangle((1, 1), 2, 1) == (2, 2)
    assert add_rectangle((), 3, 0) == ()
    assert add_rectangle((), 2, 3) == (3, 3)
    with pytest.raises(ValueError):
        add_rectangle((1, 1, 1), 2, 5)


def test_syt_hook_known_values():
    assert syt_count_hook(()) == 1
    assert syt_count_hook((5,)) == 1
    assert syt_count_hook((1, 1, 1)) == 1
    assert syt_count_hook((2, 1)) == 2
    assert syt_count_hook((2, 2)) == 2
    assert syt_count_hook((3, 1)) == 3
    assert syt_count_hook((2, 2, 1)) == 5
    assert syt_count_hook((4, 4)) == 14
    assert syt_count_hook((5, 4, 1)) == 288
    assert syt_count_hook((4, 3, 2, 1)) == 768


def test_syt_bruteforce_known_values():
    assert syt_count_bruteforce(()) == 1
    assert syt_count_bruteforce((3, 1)) == 3
    assert syt_count_bruteforce((2, 2, 1)) == 5


def test_syt_bruteforce_cap():
    with pytest.raises(ValueError):
        syt_count_bruteforce((7, 6), cap=12)
    assert syt_count_bruteforce((13,), cap=13) == 1
    with pytest.raises(ValueError):
        syt_count_bruteforce((1,), cap=0)


@settings(max_examples=80, deadline=None)
@given(lam=partitions(max_weight=10))
def test_hook_equals_bruteforce(lam):
    assert syt_count_hook(lam) == syt_count_bruteforce(lam)


@given(lam=partitions(), extra=st.integers(min_value=0, max_value=5))
def test_hook_padding_invariance(lam, extra):
    assert syt_count_hook(lam + (0,) * extra) == syt_count_hook(lam)


@given(lam=partitions())
def test_conjugate_involution_and_count_symmetry(lam):
    assert conjugate(conjugate(lam)) == lam
    assert syt_count_hook(conjugate(lam)) == syt_count_hook(lam)


def test_rsk_square_sum():
    # sum of f(lam)^2 over partitions of k counts permutations of k letters
    for k in range(11):
        total = sum(
            syt_count_hook(lam) ** 2 for lam in enumerate_partitions(k, max(k, 1))
        )
        assert total == factorial(k)
