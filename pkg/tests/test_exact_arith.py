from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import divisors_oracle, sf_oracle
from taucongruent.errors import FactorizationLimitExceeded, NonPositiveInput
from taucongruent.exact_arith import (
    as_rat,
    factorize,
    format_rat,
    is_probable_prime,
    is_rational_square,
    parse_rat,
    rationals_by_height,
    signed_divisors,
    squarefree_class,
    squarefree_part,
    trial_bound,
)

positive_rats = st.builds(Fraction, st.integers(1, 10**9 - 1), st.integers(1, 10**9 - 1))
small_rats = st.builds(Fraction, st.integers(1, 10**6), st.integers(1, 10**6))


@pytest.mark.parametrize(
    "q, expected",
    [
        (Fraction(4, 3), 3),
        (Fraction(156), 39),
        (Fraction(1), 1),
        (Fraction(336), 21),
        (Fraction(3, 8), 6),
        (Fraction(24, 54), 1),
    ],
)
def test_squarefree_class_examples(q, expected):
    assert expected == sf_oracle(q)
    assert squarefree_class(q) == expected


@pytest.mark.parametrize("q", [0, -1, Fraction(-4, 3)])
def test_squarefree_class_rejects_non_positive(q):
    with pytest.raises(NonPositiveInput):
        squarefree_class(q)


def test_signed_divisors_examples():
    assert signed_divisors(2) == [-2, -1, 1, 2]
    assert signed_divisors(1) == [-1, 1]
    assert signed_divisors(10) == divisors_oracle(10) == [-10, -5, -2, -1, 1, 2, 5, 10]


@pytest.mark.parametrize("n", range(1, 400))
def test_signed_divisors_match_trial_division(n):
    divs = signed_divisors(n)
    assert divs == divisors_oracle(n)
    assert len(divs) % 2 == 0
    assert sorted(-d for d in divs) == divs


def test_signed_divisors_rejects_zero():
    with pytest.raises(NonPositiveInput):
        signed_divisors(0)


@pytest.mark.parametrize(
    "q, expected",
    [(Fraction(16, 9), True), (Fraction(6), False), (Fraction(24, 54), True), (Fraction(0), True), (Fraction(-4), False)],
)
def test_is_rational_square(q, expected):
    assert is_rational_square(q) is expected


@pytest.mark.parametrize(
    "n",
    [
        2**61 - 1,
        (2**61 - 1) * (2**31 - 1),
        (10**9 + 7) ** 2 * (10**9 + 9),
        (1_000_003 * 1_000_033) ** 3 * 6,
        1_000_003 * 1_000_033 * 1_000_037 * 1_000_039,
        2**64 + 13,
        3**40 * 7**3,
        999_999_999_989 * 999_999_999_959,
    ],
)
def test_factorize_large_against_sympy(n):
    assert factorize(n) == sympy.factorint(n)
    assert squarefree_part(n) == sf_oracle(n)


def test_primality_against_sympy():
    for n in list(range(1, 5000)) + [2**89 - 1, 2**89 + 1, 3_317_044_064_679_887_385_961_981]:
        assert is_probable_prime(n) == sympy.isprime(n), n


def test_factorization_limit_is_reported_not_guessed():
    p, q = 1_000_000_007, 998_244_353
    with pytest.raises(FactorizationLimitExceeded) as info:
        factorize(p * q * p * q * p, bound=100, rho_budget=10)
    assert info.value.cofactor > 1


def test_factor_limit_environment(monkeypatch):
    monkeypatch.setenv("FACTOR_LIMIT", "1000")
    assert trial_bound() == 1000
    # a larger composite still resolves through the rho stage
    assert squarefree_class(Fraction(1_000_003**2 * 1_000_033, 7)) == 1_000_033 * 7
    monkeypatch.delenv("FACTOR_LIMIT")
    assert trial_bound() == 10**6


def test_parse_and_format_round_trip():
    assert parse_rat("4/3") == Fraction(4, 3)
    assert parse_rat("-6/4") == Fraction(-3, 2)
    assert format_rat(Fraction(4, 3)) == "4/3"
    assert format_rat(6) == "6"
    assert format_rat(Fraction(-3, 2)) == "-3/2"
    for bad in ["1.5", "1e3", "3/0", "a/b", "", "1/-2"]:
        with pytest.raises(ValueError):
            parse_rat(bad)
    with pytest.raises(TypeError):
        as_rat(0.5)


def test_rationals_by_height_prefix():
    gen = rationals_by_height()
    head = [next(gen) for _ in range(7)]
    assert head == [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(1, 3), Fraction(2, 3), Fraction(3, 2), Fraction(3)]


def test_rationals_by_height_has_no_repeats():
    gen = rationals_by_height()
    seen = [next(gen) for _ in range(3000)]
    assert len(set(seen)) == len(seen)
    assert all(q > 0 for q in seen)


@settings(max_examples=300, deadline=None)
@given(positive_rats)
def test_squarefree_class_matches_oracle(q):
    assert squarefree_class(q) == sf_oracle(q)


@settings(max_examples=300, deadline=None)
@given(positive_rats)
def test_quotient_by_class_is_square(q):
    assert is_rational_square(q / squarefree_class(q))


@settings(max_examples=200, deadline=None)
@given(positive_rats, positive_rats)
def test_multiplicative_mod_squares(p, q):
    assert squarefree_class(p * q) == squarefree_class(squarefree_class(p) * squarefree_class(q))


@settings(max_examples=40, deadline=None)
@given(positive_rats, positive_rats)
def test_square_stripping_with_large_square(q, r):
    assert squarefree_class(q * r * r) == squarefree_class(q)


@settings(max_examples=200, deadline=None)
@given(small_rats)
def test_idempotent(q):
    s = squarefree_class(q)
    assert squarefree_class(Fraction(s)) == s
