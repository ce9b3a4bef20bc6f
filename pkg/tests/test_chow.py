import random

import pytest
from hypothesis import given, strategies as st

from arithjet.chow import (
    AmbientSpec,
    ChernSeries,
    CycleClass,
    IntersectionTable,
    ci_cotangent_segre,
    evaluate,
    frobenius_pullback,
    invert_series,
    restrict_to_ci,
    whitney_product,
)
from arithjet.errors import (
    AmbientMismatch,
    InvalidInput,
    InvalidSeries,
    MissingIntersectionNumber,
)

from conftest import random_class, random_series
from oracles import conormal_segre

LINE = AmbientSpec(3, ("l",))
ABC = AmbientSpec(5, ("a", "b", "c"))


def cls(ambient, text):
    return CycleClass.parse(ambient, text)


def test_invert_geometric_series():
    s = ChernSeries.parse(LINE, "1 + l")
    assert invert_series(s) == ChernSeries.parse(LINE, "1 - l + l^2 - l^3")
    one = ChernSeries.one(LINE)
    assert invert_series(one) == one


def test_invalid_series():
    with pytest.raises(InvalidSeries):
        ChernSeries.parse(LINE, "2 + l")
    with pytest.raises(InvalidSeries):
        ChernSeries(LINE, [CycleClass.one(LINE), cls(LINE, "l^2")])


def test_whitney_examples():
    amb = AmbientSpec(3, ("a", "b"))
    prod = whitney_product(ChernSeries.parse(amb, "1 + a"), ChernSeries.parse(amb, "1 + b"))
    assert prod == ChernSeries.parse(amb, "1 + a + b + a*b")
    s = ChernSeries.parse(amb, "1 - 2*a + a*b - b^3")
    assert whitney_product(ChernSeries.one(amb), s) == s


def test_whitney_mismatches():
    a = ChernSeries.parse(LINE, "1 + l")
    with pytest.raises(AmbientMismatch):
        whitney_product(a, ChernSeries.parse(AmbientSpec(3, ("m",)), "1 + m"))
    with pytest.raises(AmbientMismatch):
        whitney_product(a, ChernSeries.parse(LINE, "1 + l", truncation=2))


def test_frobenius_pullback_examples():
    amb = AmbientSpec(1, ("k",))
    for g in (2, 3, 7):
        for p in (3, 5, 11):
            canon = ChernSeries.from_class(CycleClass.one(amb) + cls(amb, f"{2 * g - 2}*k"))
            assert frobenius_pullback(canon, p)[1] == cls(amb, f"{p * (2 * g - 2)}*k")
    one = ChernSeries.one(ABC)
    assert frobenius_pullback(one, 7) == one
    s = ChernSeries.parse(ABC, "1 + a - b^2 + 3*a*b*c + c^5")
    assert frobenius_pullback(frobenius_pullback(s, 3), 5) == frobenius_pullback(s, 15)
    with pytest.raises(InvalidInput):
        frobenius_pullback(s, 0)


def test_ci_segre_examples():
    amb2 = AmbientSpec.with_hypersurfaces(2, 1)
    for p in (3, 5, 7):
        s = ci_cotangent_segre(amb2, ["h1"], p)
        assert s.truncation == 1
        assert s[1] == cls(amb2, f"-{p}*h1")
        assert s == conormal_segre(amb2, ["h1"], p, 1)
    amb3 = AmbientSpec.with_hypersurfaces(3, 2)
    s = ci_cotangent_segre(amb3, ["h1", "h2"], 5)
    assert s[1] == cls(amb3, "-5*h1 - 5*h2")
    assert s == conormal_segre(amb3, ["h1", "h2"], 5, 1)
    # p = 1 leaves prod (1 - h_j).
    full = ci_cotangent_segre(amb3, ["h1", "h2"], 1, truncation=3)
    assert full.total() == (1 - CycleClass.symbol(amb3, "h1")) * (1 - CycleClass.symbol(amb3, "h2"))


def test_ci_segre_errors():
    amb = AmbientSpec.with_hypersurfaces(2, 3)
    with pytest.raises(InvalidInput):
        ci_cotangent_segre(amb, ["h1", "h2", "h3"], 3)
    with pytest.raises(AmbientMismatch):
        ci_cotangent_segre(amb, ["h9"], 3)
    with pytest.raises(InvalidInput):
        ci_cotangent_segre(amb, ["h1", "h1"], 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_ci_segre_matches_conormal_oracle(n):
    for c in range(0, n + 1):
        amb = AmbientSpec.with_hypersurfaces(n, c)
        hyps = list(amb.symbols[1:])
        for p in (3, 5):
            assert ci_cotangent_segre(amb, hyps, p) == conormal_segre(amb, hyps, p, n - c)


def test_evaluate_examples():
    amb = AmbientSpec(3, ("theta",))
    table = IntersectionTable.from_json({"n": 3, "symbols": ["theta"], "numbers": {"theta^3": 6}})
    assert evaluate(cls(amb, "theta^3"), table) == 6
    amb3 = AmbientSpec.with_hypersurfaces(3, 2)
    a, b = 11, -4
    table = IntersectionTable.from_json(
        {"n": 3, "symbols": ["theta", "h1", "h2"], "numbers": {"theta*h1*h2": a, "h1^2*h2": b}}
    )
    assert evaluate(cls(amb3, "2*theta*h1*h2 + h1^2*h2"), table) == 2 * a + b
    assert evaluate(CycleClass(amb3), table) == 0
    with pytest.raises(MissingIntersectionNumber) as err:
        evaluate(cls(amb3, "theta*h1*h2 + h2^3"), table)
    assert err.value.monomial == "h2^3"
    with pytest.raises(InvalidInput):
        evaluate(cls(amb3, "theta*h1"), table)


def test_table_validation():
    with pytest.raises(InvalidInput):
        IntersectionTable.from_json({"n": 2, "symbols": ["theta"], "numbers": {"theta^3": 1}})
    with pytest.raises(InvalidInput):
        IntersectionTable.from_json({"n": 2, "symbols": ["theta"], "numbers": {"2*theta^2": 1}})
    with pytest.raises(AmbientMismatch):
        IntersectionTable.from_json({"n": 2, "symbols": ["theta"], "numbers": {"h1^2": 1}})
    with pytest.raises(InvalidInput):
        IntersectionTable.from_json({"n": 2, "symbols": ["theta"]})
    t = IntersectionTable.from_json(
        {"n": 2, "symbols": ["theta", "h1"], "numbers": {"h1*theta": "12345678901234567890"}}
    )
    assert t.to_json()["numbers"] == {"theta*h1": 12345678901234567890}


def test_restrict_examples():
    amb = AmbientSpec.with_hypersurfaces(3, 2)
    assert restrict_to_ci(CycleClass.one(amb), ["h1"]) == cls(amb, "h1")
    assert restrict_to_ci(cls(amb, "theta"), ["h1", "h2"]) == cls(amb, "theta*h1*h2")
    with pytest.raises(InvalidInput):
        restrict_to_ci(cls(amb, "theta^2"), ["h1", "h2"])
    with pytest.raises(AmbientMismatch):
        restrict_to_ci(cls(amb, "theta"), ["h7"])


def test_restrict_linear():
    rng = random.Random(3)
    amb = AmbientSpec.with_hypersurfaces(4, 2)
    for _ in range(50):
        x, y = random_class(rng, amb, 2), random_class(rng, amb, 2)
        m = rng.randint(-5, 5)
        hyps = ["h1", "h2"]
        assert restrict_to_ci(x + y.scale(m), hyps) == restrict_to_ci(x, hyps) + restrict_to_ci(y, hyps).scale(m)


def test_class_truncates_above_dimension():
    amb = AmbientSpec(2, ("a",))
    assert cls(amb, "a") * cls(amb, "a^2") == 0
    assert str(cls(amb, "a^2 - 3*a + 1 + a^3")) == "a^2 - 3*a + 1"


seeds = st.integers(0, 2**32 - 1)


@given(seeds, st.integers(0, 5))
def test_inverse_property(seed, N):
    s = random_series(random.Random(seed), ABC, N)
    t = invert_series(s)
    assert whitney_product(s, t) == ChernSeries.one(ABC, N)
    assert invert_series(t) == s
    if N >= 2:
        assert t[1] == -s[1]
        assert t[2] == s[1] * s[1] - s[2]


@given(seeds, st.integers(0, 5))
def test_whitney_associative_commutative(seed, N):
    rng = random.Random(seed)
    a, b, c = (random_series(rng, ABC, N) for _ in range(3))
    assert whitney_product(a, b) == whitney_product(b, a)
    assert whitney_product(whitney_product(a, b), c) == whitney_product(a, whitney_product(b, c))


@given(seeds, st.integers(0, 5), st.sampled_from([2, 3, 5, 7]))
def test_pullback_multiplicative(seed, N, p):
    rng = random.Random(seed)
    a, b = random_series(rng, ABC, N), random_series(rng, ABC, N)
    assert frobenius_pullback(whitney_product(a, b), p) == whitney_product(
        frobenius_pullback(a, p), frobenius_pullback(b, p)
    )
    for i in range(N + 1):
        assert frobenius_pullback(a, p)[i] == a[i].scale(p**i)
