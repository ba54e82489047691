import numpy as np
import pytest
from hypothesis import strategies as st

from assinf.core import Ambient, MonomialIdeal, MonomialPrime

NAMES = ("x", "y", "z", "w")


def ambient(n):
    return Ambient(NAMES[:n])


def random_ideal(rng, n_max=4, gens_max=4, exp_max=3, n=None):
    """Nonzero proper ideal: 1..gens_max nonconstant generators, exponents <= exp_max."""
    n = n or int(rng.integers(1, n_max + 1))
    k = int(rng.integers(1, gens_max + 1))
    rows = []
    while len(rows) < k:
        row = rng.integers(0, exp_max + 1, size=n)
        if row.any():
            rows.append(row)
    return MonomialIdeal(ambient(n), np.array(rows))


def random_family(seed, count, **kw):
    rng = np.random.default_rng(seed)
    return [random_ideal(rng, **kw) for _ in range(count)]


@st.composite
def ideals(draw, n_max=4, gens_max=5, exp_max=3, n=None):
    n = n or draw(st.integers(1, n_max))
    row = st.lists(st.integers(0, exp_max), min_size=n, max_size=n).filter(any)
    rows = draw(st.lists(row, min_size=1, max_size=gens_max))
    return MonomialIdeal(ambient(n), np.array(rows))


@st.composite
def ideal_pairs(draw, n_max=4, gens_max=4, exp_max=3):
    n = draw(st.integers(1, n_max))
    return draw(ideals(n=n, gens_max=gens_max, exp_max=exp_max)), draw(ideals(n=n, gens_max=gens_max, exp_max=exp_max))


@st.composite
def monomials_in_box(draw, amb, bound):
    return amb.monomial(draw(st.lists(st.integers(0, bound), min_size=amb.n, max_size=amb.n)))


@st.composite
def primes(draw, amb):
    support = draw(st.lists(st.integers(0, amb.n - 1), min_size=1, max_size=amb.n, unique=True))
    return MonomialPrime(amb, support)


@pytest.fixture
def xyz():
    return Ambient(("x", "y", "z"))


@pytest.fixture
def xy():
    return Ambient(("x", "y"))


@pytest.fixture
def six_var_ideal():
    A = Ambient(tuple("abcdef"))
    m = A.monomial
    return A.ideal(m(a=3, b=2, e=1), m(b=1, c=3, d=1), m(b=4, d=1, e=2, f=1), m(a=1, b=2, c=1, f=3))


# -- acceptance reporting -----------------------------------------------------

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {text}")
