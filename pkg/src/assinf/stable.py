"""Associated primes of powers and the stable set Ass^inf(I).

Membership of a prime ``P = P_F`` is decided the standard way for monomial
ideals: substitute 1 for every variable outside ``F`` (so ``P`` becomes the
maximal ideal ``m`` of the smaller ring), then ``P`` is associated to ``I^s``
iff ``(J^s : m) != J^s`` for the restricted ideal ``J``.  That check is exact
for each ``s``.  Deciding "for all large ``s``" is done by watching the
observations until they stay constant for ``window`` consecutive powers; such
verdicts are never certified.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _kernels
from ._parallel import ordered_map
from .core import (
    IdealError,
    Monomial,
    MonomialPrime,
    _canonical,
    _check_ambient,
    localize_restrict,
    power,
    sorted_primes,
)
from .decomposition import ass, min_primes


@dataclass(frozen=True)
class StabilizationConfig:
    window: int = 3
    s_floor: int = 2
    s_max: int = 20

    def __post_init__(self):
        for name in ("window", "s_floor", "s_max"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise TypeError(f"{name} must be an integer, got {v!r}")
        if self.window < 1:
            raise ValueError("window must be >= 1")
        if self.s_floor < 0:
            raise ValueError("s_floor must be >= 0")
        if self.s_max < self.window:
            raise ValueError("s_max must be >= window")


@dataclass(frozen=True)
class MembershipReport:
    prime: MonomialPrime
    member: bool
    history: tuple  # ((s, observed), ...)
    stabilized_at: object  # int or None
    stabilized: bool
    config: StabilizationConfig
    certified: bool = False


@dataclass(frozen=True)
class StabilizationReport:
    history: tuple  # ((s, primes), ...)
    stable_set: tuple
    stabilized_at: object
    stabilized: bool
    config: StabilizationConfig
    certified: bool = False


def _require_proper(I):
    if I.is_zero():
        raise IdealError("the zero ideal has no associated primes")
    if I.is_unit():
        raise IdealError("the unit ideal has no associated primes")


def _socle_excess(A):
    """Minimal generators of ``(J : m)`` that are not in ``J``; ``A`` = G(J)."""
    n = A.shape[1]
    excess = None
    for i in range(n):
        # (J : x_i) = J + (g / x_i : g_i > 0)
        rows = A[A[:, i] > 0].copy()
        rows[:, i] -= 1
        if excess is not None:
            rows = np.maximum(excess[:, None, :], rows[None, :, :]).reshape(-1, n)
        rows = rows[~_kernels.covered_mask(A, rows)]
        excess = _canonical(rows)
        if excess.shape[0] == 0:
            break
    return excess


def socle_witness(J):
    """A monomial in ``(J : m) \\ J`` or None; ``m`` is generated by all variables."""
    _require_proper(J)
    ex = _socle_excess(J.matrix)
    if ex.shape[0] == 0:
        return None
    return Monomial(J.ambient, tuple(ex[0].tolist()))


def socle_nonzero(J):
    return socle_witness(J) is not None


def _restrict(P, I):
    _check_ambient(P.ambient, I.ambient)
    _require_proper(I)
    return localize_restrict(I, P.support)


def is_assoc_of_power(P, I, s):
    """Whether ``P`` is associated to ``I^s``."""
    J = _restrict(P, I)
    if J.is_unit():
        return False  # I is not contained in P
    return socle_nonzero(power(J, s))


def _stabilize(observe, cfg):
    history = []
    for s in range(1, cfg.s_max + 1):
        obs = observe(s)
        history.append((s, obs))
        if s < cfg.s_floor or len(history) < cfg.window:
            continue
        if all(h[1] == obs for h in history[-cfg.window:]):
            start = s
            while start > 1 and history[start - 2][1] == obs:
                start -= 1
            return tuple(history), start, True
    return tuple(history), None, False


def is_in_ass_infinity(P, I, cfg=None):
    cfg = cfg or StabilizationConfig()
    J = _restrict(P, I)
    if J.is_unit():
        observe = lambda s: False
    else:
        observe = lambda s: socle_nonzero(power(J, s))
    history, start, ok = _stabilize(observe, cfg)
    return MembershipReport(
        prime=P,
        member=history[-1][1],
        history=history,
        stabilized_at=start,
        stabilized=ok,
        config=cfg,
    )


def candidate_primes(I):
    """All monomial primes supported inside supp(I)."""
    amb = I.ambient
    supp = I.support
    return tuple(
        MonomialPrime(amb, F)
        for k in range(1, len(supp) + 1)
        for F in combinations(supp, k)
    )


def ass_of_power(I, s, method="decompose"):
    """``Ass(I^s)``.

    ``method="decompose"`` decomposes ``I^s`` directly; ``method="socle"``
    runs the per-prime test over every support inside supp(I).
    """
    _require_proper(I)
    if method == "decompose":
        return ass(power(I, s))
    if method == "socle":
        cands = candidate_primes(I)
        flags = ordered_map(lambda P: is_assoc_of_power(P, I, s), cands)
        return sorted_primes(P for P, f in zip(cands, flags) if f)
    raise ValueError(f"unknown method {method!r}")


def ass_infinity(I, cfg=None, method="decompose"):
    cfg = cfg or StabilizationConfig()
    _require_proper(I)
    history, start, ok = _stabilize(lambda s: ass_of_power(I, s, method), cfg)
    stable = history[-1][1]
    assert set(min_primes(I)) <= set(stable)
    return StabilizationReport(
        history=history,
        stable_set=stable,
        stabilized_at=start,
        stabilized=ok,
        config=cfg,
    )
