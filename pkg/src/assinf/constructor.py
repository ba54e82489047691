"""Build a monomial ideal whose stable associated primes are a prescribed set.

Given distinct nonzero monomial primes ``P_1, ..., P_m`` sorted by number of
generators, set ``J_1 = P_1`` and ``J_{r+1} = J_r ∩ P_{r+1}^{k_{r+1}}`` with
``k_{r+1} > min deg G(J_r)``.  Each step adds exactly one associated prime.
Then ``I = ∩ P_i^{d k_i}`` has ``Ass(I^s) = {P_1, ..., P_m}`` for every ``s``
as soon as powers of ``I`` distribute over the intersection, which holds for
some ``d``.  Here ``d`` defaults to 1 and can be searched for empirically.
"""

from dataclasses import dataclass

from ._parallel import ordered_map
from .core import IdealError, _check_ambient, intersect, min_gen_degree, power, sorted_primes
from .decomposition import ass


class ConstructionError(RuntimeError):
    """A construction failed its own postcondition."""


@dataclass(frozen=True)
class ConstructionTrace:
    primes: tuple
    ks: tuple
    intermediates: tuple
    d: int
    result: object
    d_search: object = None  # DistributionReport backing a searched d

    @property
    def empirical(self):
        return self.d_search is not None


@dataclass(frozen=True)
class DistributionReport:
    factors: tuple  # ((prime, exponent), ...)
    checks: tuple  # ((s, holds), ...)

    @property
    def holds(self):
        return all(ok for _, ok in self.checks)


@dataclass(frozen=True)
class LemmaReport:
    applicable: bool
    holds: object  # bool, or None when inapplicable
    lhs: tuple
    rhs: tuple


def _order_primes(primes):
    primes = list(primes)
    if not primes:
        raise ValueError("need at least one prime")
    amb = primes[0].ambient
    for P in primes:
        _check_ambient(amb, P.ambient)
    if len(set(primes)) != len(primes):
        raise ValueError("duplicate primes")
    return sorted_primes(primes)


def realize_stable_set(primes, d=1, k_overrides=None):
    """Construct ``I`` with ``Ass^inf(I)`` equal to ``primes``.

    ``k_overrides`` maps a prime (other than the first in sorted order) to its
    exponent; each must exceed the minimal generator degree of the previous
    intermediate ideal.
    """
    primes = _order_primes(primes)
    if d < 1:
        raise ValueError("d must be >= 1")
    k_overrides = dict(k_overrides or {})
    unknown = set(k_overrides) - set(primes)
    if unknown:
        raise ValueError(f"overrides for primes not in the input: {sorted_primes(unknown)}")
    if primes[0] in k_overrides and k_overrides[primes[0]] != 1:
        raise ValueError(f"k for the first prime {primes[0]} is fixed to 1")

    ks = [1]
    intermediates = [primes[0].as_ideal()]
    for P in primes[1:]:
        bound = min_gen_degree(intermediates[-1])
        k = k_overrides.get(P, bound + 1)
        if k <= bound:
            raise ValueError(f"k={k} for {P} must exceed {bound}")
        ks.append(k)
        intermediates.append(intersect(intermediates[-1], power(P.as_ideal(), k)))

    result = intersect(*(power(P.as_ideal(), d * k) for P, k in zip(primes, ks)))
    if set(ass(result)) != set(primes):
        raise ConstructionError(f"Ass of {result} is {ass(result)}, expected {primes}")
    return ConstructionTrace(tuple(primes), tuple(ks), tuple(intermediates), d, result)


def verify_power_distribution(factors, s_max):
    """Check ``(∩ P_i^{e_i})^s == ∩ P_i^{s e_i}`` for ``s = 1..s_max``."""
    factors = tuple((P, int(e)) for P, e in factors)
    if not factors:
        raise ValueError("need at least one (prime, exponent) pair")
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    base = intersect(*(power(P.as_ideal(), e) for P, e in factors))

    def check(s):
        rhs = intersect(*(power(P.as_ideal(), s * e) for P, e in factors))
        return (s, power(base, s) == rhs)

    return DistributionReport(factors, tuple(ordered_map(check, range(1, s_max + 1))))


def search_d(primes, depth=4, d_max=16, k_overrides=None):
    """Smallest ``d <= d_max`` for which powers distribute up to ``depth``."""
    for d in range(1, d_max + 1):
        trace = realize_stable_set(primes, d=d, k_overrides=k_overrides)
        report = verify_power_distribution(
            [(P, d * k) for P, k in zip(trace.primes, trace.ks)], depth
        )
        if report.holds:
            return ConstructionTrace(
                trace.primes, trace.ks, trace.intermediates, d, trace.result, report
            )
    raise ConstructionError(f"no d <= {d_max} distributes powers up to s = {depth}")


def lemma_intersection_check(I, P, k):
    """Test ``Ass(I ∩ P^k) == Ass(I) ∪ {P}`` where the hypotheses allow it.

    The hypotheses are: ``P`` lies in no associated prime of ``I``, and
    ``I`` is not contained in ``P^k``.
    """
    _check_ambient(I.ambient, P.ambient)
    if I.is_zero() or I.is_unit():
        raise IdealError("I must be nonzero and proper")
    if k < 1:
        raise ValueError("k must be >= 1")
    base = ass(I)
    Pk = power(P.as_ideal(), k)
    applicable = not any(P.issubset(Q) for Q in base) and not I.issubset(Pk)
    lhs = ass(intersect(I, Pk))
    rhs = sorted_primes(base + (P,))
    return LemmaReport(applicable, (lhs == rhs) if applicable else None, lhs, rhs)
