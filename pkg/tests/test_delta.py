import pytest
from hypothesis import given, strategies as st

from arithjet.delta import (
    DeltaContext,
    delta,
    delta_iter,
    fermat_quotient,
    frobenius_substitution,
    is_prime,
)
from arithjet.errors import InvalidInput
from arithjet.parsing import parse_polynomial as P
from arithjet.polyring import Polynomial, divide_exact

from conftest import JET_VARS, polynomials
from oracles import delta_recursive

PRIMES = st.sampled_from([3, 5, 7])

# delta(delta(x + 1)) at p = 3, frozen from the recursive oracle.
DELTA2_X_PLUS_1 = (
    "x^2*x@1^2 - x^4*x@1 + x*x@1^2 - 4*x^3*x@1 + x^5 - 3*x@1^2 - x^2*x@1 + x^4 + x@2 - x@1"
)


def test_fermat_quotient_examples():
    c3 = DeltaContext(3)
    assert fermat_quotient(2, c3) == -2
    for p in (3, 5, 7, 101):
        ctx = DeltaContext(p)
        assert fermat_quotient(0, ctx) == 0
        assert fermat_quotient(1, ctx) == 0


@pytest.mark.parametrize("c", [-17, -2, -1, 0, 1, 2, 10**20 + 3])
@pytest.mark.parametrize("p", [3, 5, 13])
def test_delta_of_constants_is_fermat_quotient(c, p):
    ctx = DeltaContext(p)
    assert delta(Polynomial.constant(c), ctx) == fermat_quotient(c, ctx)
    assert fermat_quotient(c, ctx) == (c - c**p) // p


def test_frobenius_examples():
    ctx = DeltaContext(3)
    assert str(frobenius_substitution(P("x"), ctx)) == "x^3 + 3*x@1"
    assert frobenius_substitution(P("5"), ctx) == 5
    assert str(frobenius_substitution(P("x@1"), ctx)) == "x@1^3 + 3*x@2"


def test_delta_examples():
    for p in (3, 5, 7):
        assert delta(P("x"), DeltaContext(p)) == P("x@1")
    ctx = DeltaContext(3)
    assert str(delta(P("x + 1"), ctx)) == "x@1 - x^2 - x"
    # Hand expansion of (phi(x + 1) - (x + 1)^3) / 3.
    hand = divide_exact(P("x^3 + 3*x@1 + 1") - P("x^3 + 3*x^2 + 3*x + 1"), 3)
    assert delta(P("x + 1"), ctx) == hand
    assert delta(P("2"), ctx) == -2


def test_delta_iter_examples():
    ctx = DeltaContext(3)
    for p in (3, 5):
        assert delta_iter(P("x"), DeltaContext(p), 2) == P("x@2")
    f = P("x^2*y - 3*y + 1")
    assert delta_iter(f, ctx, 1) == delta(f, ctx)
    assert delta_iter(f, ctx, 0) == f
    twice = delta_iter(P("x + 1"), ctx, 2)
    assert twice == delta_recursive(delta_recursive(P("x + 1"), 3), 3)
    assert str(twice) == DELTA2_X_PLUS_1


def test_delta_raises_order_by_one():
    ctx = DeltaContext(5)
    f = P("x^2*x@1 + y@2")
    assert delta(f, ctx).max_order == 3
    assert delta_iter(P("x*y"), ctx, 2).max_order == 2


def test_context_validation():
    with pytest.raises(InvalidInput, match="odd"):
        DeltaContext(2)
    for bad in (1, 0, -3, 9, 15, 91):
        with pytest.raises(InvalidInput):
            DeltaContext(bad)
    with pytest.raises(InvalidInput):
        DeltaContext(3.0)
    assert DeltaContext(1_000_000_007).p == 1_000_000_007


def test_context_variable_set():
    ctx = DeltaContext(3, frozenset({"x"}))
    assert delta(P("x@1"), ctx) == P("x@2")
    with pytest.raises(InvalidInput):
        delta(P("x*y"), ctx)


def test_is_prime_matches_sieve():
    limit = 3000
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, limit):
        if sieve[i]:
            for j in range(i * i, limit, i):
                sieve[j] = False
    assert [n for n in range(limit) if is_prime(n)] == [n for n in range(limit) if sieve[n]]
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert is_prime(2**61 - 1)


@given(polynomials(JET_VARS, max_deg=3, max_terms=4), PRIMES)
def test_delta_matches_recursive_oracle(f, p):
    assert delta(f, DeltaContext(p)) == delta_recursive(f, p)


@given(polynomials(), polynomials(), PRIMES)
def test_frobenius_is_ring_homomorphism(f, g, p):
    ctx = DeltaContext(p)
    phi = lambda h: frobenius_substitution(h, ctx)  # noqa: E731
    assert phi(f + g) == phi(f) + phi(g)
    assert phi(f * g) == phi(f) * phi(g)


@given(polynomials(JET_VARS, max_deg=3), PRIMES)
def test_frobenius_lifts_p_power(f, p):
    ctx = DeltaContext(p)
    diff = frobenius_substitution(f, ctx) - f**p
    assert all(c % p == 0 for c in diff.coefficients())
    assert frobenius_substitution(f, ctx) == f**p + delta(f, ctx).scale(p)
