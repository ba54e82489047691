import pytest
from hypothesis import given, settings, strategies as st

from assinf.core import Ambient, IdealError, MonomialIdeal, MonomialPrime, intersect, min_gen_degree, power
from assinf.constructor import (
    lemma_intersection_check,
    realize_stable_set,
    search_d,
    verify_power_distribution,
)
from assinf.decomposition import ass
from assinf.oracle import ass_bruteforce
from assinf.stable import ass_of_power


@pytest.fixture
def A2():
    return Ambient(("x1", "x2"))


@st.composite
def prime_sets(draw, n_max=4, m_max=3):
    n = draw(st.integers(1, n_max))
    amb = Ambient(("x1", "x2", "x3", "x4")[:n])
    supports = st.frozensets(st.integers(0, n - 1), min_size=1)
    chosen = draw(st.lists(supports, min_size=1, max_size=min(m_max, 2 ** n - 1), unique=True))
    return [MonomialPrime(amb, sorted(F)) for F in chosen]


def test_single_prime():
    X = Ambient(("x",))
    t = realize_stable_set([X.prime("x")])
    assert t.result == X.prime("x").as_ideal() and t.ks == (1,) and t.d == 1


def test_prime_and_embedded(A2):
    t = realize_stable_set([A2.prime("x1", "x2"), A2.prime("x1")])
    assert [P.names for P in t.primes] == [("x1",), ("x1", "x2")]
    assert t.ks == (1, 2)
    expected = MonomialIdeal(A2, [[2, 0], [1, 1]])
    assert t.intermediates[1] == expected and t.result == expected
    assert ass_bruteforce(t.result) == t.primes


def test_two_coordinate_primes(A2):
    t = realize_stable_set([A2.prime("x1"), A2.prime("x2")])
    assert t.ks == (1, 2)
    assert t.intermediates[1] == A2.ideal(A2.monomial(x1=1, x2=2))
    for s in range(1, 5):
        assert ass_of_power(t.intermediates[1], s) == t.primes


def test_construction_errors(A2):
    P, Q = A2.prime("x1"), A2.prime("x1", "x2")
    with pytest.raises(ValueError):
        realize_stable_set([P, P])
    with pytest.raises(ValueError):
        realize_stable_set([])
    with pytest.raises(ValueError):
        realize_stable_set([P, Q], k_overrides={Q: 1})
    with pytest.raises(ValueError):
        realize_stable_set([P, Q], k_overrides={P: 3})
    with pytest.raises(ValueError):
        realize_stable_set([P], k_overrides={Q: 5})
    with pytest.raises(ValueError):
        MonomialPrime(A2, [])


def test_override_larger_k(A2):
    P, Q = A2.prime("x1"), A2.prime("x1", "x2")
    t = realize_stable_set([P, Q], k_overrides={Q: 5})
    assert t.ks == (1, 5)
    assert ass(t.result) == (P, Q)


def test_lemma_examples(A2):
    x1 = A2.prime("x1").as_ideal()
    rep = lemma_intersection_check(x1, A2.prime("x2"), 1)
    assert rep.applicable and rep.holds
    assert [P.names for P in rep.lhs] == [("x1",), ("x2",)]
    rep = lemma_intersection_check(A2.prime("x1", "x2").as_ideal(), A2.prime("x1"), 1)
    assert not rep.applicable and rep.holds is None
    rep = lemma_intersection_check(x1, A2.prime("x1", "x2"), 2)
    assert rep.applicable and rep.holds
    assert [P.names for P in rep.lhs] == [("x1",), ("x1", "x2")]


def test_lemma_second_hypothesis(A2):
    # (x1^3) lies inside (x1, x2)^2, so the lemma does not apply
    I = A2.ideal(A2.monomial(x1=3))
    assert not lemma_intersection_check(I, A2.prime("x1", "x2"), 2).applicable
    with pytest.raises(IdealError):
        lemma_intersection_check(A2.zero_ideal(), A2.prime("x1"), 1)


def test_distribution_examples(A2):
    rep = verify_power_distribution([(A2.prime("x1"), 1), (A2.prime("x2"), 2)], 4)
    assert rep.holds and [s for s, _ in rep.checks] == [1, 2, 3, 4]
    X = Ambient(("x",))
    assert verify_power_distribution([(X.prime("x"), 1)], 6).holds
    rep = verify_power_distribution([(A2.prime("x1"), 1), (A2.prime("x1", "x2"), 2)], 3)
    assert rep.holds
    with pytest.raises(ValueError):
        verify_power_distribution([], 3)


def test_distribution_can_fail():
    # (x,y) ∩ (y,z) ∩ (x,z) = (xy, xz, yz): its square misses xyz from the symbolic square
    A = Ambient(("x", "y", "z"))
    factors = [(A.prime("x", "y"), 1), (A.prime("x", "z"), 1), (A.prime("y", "z"), 1)]
    rep = verify_power_distribution(factors, 2)
    assert dict(rep.checks) == {1: True, 2: False}


def test_search_d_needs_d_two():
    A = Ambient(("x1", "x2", "x3"))
    primes = [A.prime("x3"), A.prime("x1", "x2"), A.prime("x1", "x3"), A.prime("x2", "x3")]
    t = realize_stable_set(primes)
    assert t.ks == (1, 2, 4, 5)
    assert dict(verify_power_distribution(list(zip(t.primes, t.ks)), 2).checks) == {1: True, 2: False}
    t = search_d(primes, depth=4)
    assert t.d == 2 and t.empirical
    for s in range(1, 5):
        assert set(ass_of_power(t.result, s)) == set(primes)
    with pytest.raises(Exception, match="no d <= 1"):
        search_d(primes, depth=4, d_max=1)


def test_search_d_reports_empirical(A2):
    t = search_d([A2.prime("x1"), A2.prime("x1", "x2")], depth=3)
    assert t.d == 1 and t.empirical and t.d_search.holds


@settings(max_examples=60, deadline=None)
@given(prime_sets())
def test_round_trip(primes):
    t = realize_stable_set(primes)
    for r in range(1, len(t.primes) + 1):
        assert set(ass(t.intermediates[r - 1])) == set(t.primes[:r])
    for r in range(1, len(t.primes)):
        assert t.ks[r] > min_gen_degree(t.intermediates[r - 1])
        assert t.intermediates[r] == intersect(t.intermediates[r - 1], power(t.primes[r].as_ideal(), t.ks[r]))
    sizes = [len(P) for P in t.primes]
    assert sizes == sorted(sizes)


@settings(max_examples=40, deadline=None)
@given(prime_sets(), st.integers(1, 3))
def test_larger_overrides_preserve_ass(primes, bump):
    ordered = realize_stable_set(primes).primes
    over = {}
    J = ordered[0].as_ideal()
    for P in ordered[1:]:
        over[P] = min_gen_degree(J) + 1 + bump
        J = intersect(J, power(P.as_ideal(), over[P]))
    t = realize_stable_set(primes, k_overrides=over)
    assert t.intermediates[-1] == J
    for r in range(1, len(t.primes) + 1):
        assert set(ass(t.intermediates[r - 1])) == set(t.primes[:r])
