import random

import pytest
from hypothesis import settings, strategies as st

from arithjet.chow import AmbientSpec, ChernSeries, CycleClass
from arithjet.polyring import Monomial, Polynomial, Variable

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

BASE = [Variable(n) for n in "xyz"]


def random_polynomial(rng: random.Random, variables=BASE, max_deg=4, max_terms=5, coeff=9):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = {}
        for _ in range(rng.randint(0, max_deg)):
            v = rng.choice(variables)
            exps[v] = exps.get(v, 0) + 1
        terms[Monomial.from_mapping(exps)] = rng.randint(-coeff, coeff)
    return Polynomial(terms)


@st.composite
def polynomials(draw, variables=BASE, max_deg=4, max_terms=5, coeff=9):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = draw(
            st.lists(st.sampled_from(variables), max_size=max_deg)
        )
        mono = {}
        for v in exps:
            mono[v] = mono.get(v, 0) + 1
        terms[Monomial.from_mapping(mono)] = draw(st.integers(-coeff, coeff))
    return Polynomial(terms)


JET_VARS = [Variable(n, k) for n in "xy" for k in range(3)]


def random_class(rng: random.Random, ambient: AmbientSpec, codim: int, coeff=9) -> CycleClass:
    width = len(ambient.symbols)
    terms = {}
    for _ in range(rng.randint(0, 3)):
        k = [0] * width
        for _ in range(codim):
            k[rng.randrange(width)] += 1
        terms[tuple(k)] = rng.randint(-coeff, coeff)
    return CycleClass(ambient, terms)


def random_series(rng: random.Random, ambient: AmbientSpec, N: int) -> ChernSeries:
    comps = [CycleClass.one(ambient)] + [random_class(rng, ambient, i) for i in range(1, N + 1)]
    return ChernSeries(ambient, comps)


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
