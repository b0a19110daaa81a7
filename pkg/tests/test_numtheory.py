import pytest

import naive
from wordpowers.detectors import find_congruential_power
from wordpowers.numtheory import (
    NotPrimeError,
    construct_peng,
    element_order,
    find_generator,
    is_prime,
    is_qr,
    peng_params,
)
from wordpowers.search import GOLDEN

ODD_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


def test_is_prime():
    assert [n for n in range(40) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def test_generator_and_order():
    assert find_generator(5) == 2
    assert [pow(2, e, 5) for e in range(1, 5)] == [2, 4, 3, 1]
    assert element_order(1, 13) == 1
    assert element_order(2, 5) == 4
    assert find_generator(7) == 3


def test_quadratic_residues_match_squares():
    for p in ODD_PRIMES:
        squares = {x * x % p for x in range(1, p)}
        assert {a for a in range(1, p) if is_qr(a, p)} == squares
    assert is_qr(2, 7)


def test_non_prime_inputs_are_rejected():
    with pytest.raises(NotPrimeError):
        find_generator(9)
    with pytest.raises(NotPrimeError):
        construct_peng(2)
    with pytest.raises(NotPrimeError):
        construct_peng(15)


def test_p3_by_hand():
    params, word = construct_peng(3)
    assert (params.g, params.c, params.a, params.word_len) == (2, 1, 2, 5)
    # e(i) = 1 + 2 i^2 mod 3 for i = 1..6 is 0 0 1 0 0 1
    assert word == (0, 1, 2, 0, 1)
    assert naive.avoids(word, "congruential", 2, 3)


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_parameters_are_valid(p):
    params = peng_params(p)
    assert element_order(params.c, p) == (p - 1) // 2
    assert is_qr(params.a, p) == (p % 8 in (5, 7))
    assert 1 <= params.a < p


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_construction_avoids_congruential_squares(p):
    params, word = construct_peng(p)
    assert len(word) == params.word_len == p * p - p - 1
    assert all(0 <= a < p for a in word)
    assert find_congruential_power(word, 2, p) is None


@pytest.mark.parametrize("p", [3, 5, 7])
def test_construction_checked_by_naive_oracle(p):
    _, word = construct_peng(p)
    assert naive.avoids(word, "congruential", 2, p)


@pytest.mark.parametrize("p", [5, 7])
def test_length_is_below_table_value(p):
    assert p * p - p - 1 <= GOLDEN[(2, p)][0]
