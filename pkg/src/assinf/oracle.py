"""Brute-force reference answers, written without the fast paths.

Nothing here expands powers, decomposes, or calls the numeric kernels: power
membership enumerates multisets of generators, and witness searches scan a
finite box of exponent vectors.

Box soundness.  Let ``M_i`` be the largest exponent of ``x_i`` in ``G(I)``.
Whether ``g`` divides ``x^w`` depends on ``w_i`` only through
``min(w_i, M_i)``, hence so do ``x^w ∈ I`` and ``(I : x^w)``.  Any witness
can therefore be truncated into the box ``w_i <= M_i`` (``w_i <= s M_i`` for
``I^s``, whose generators have exponents at most ``s M_i``); truncating a
socle witness coordinatewise to ``s M_i`` keeps it a socle witness because
``x^w`` and every ``x_i x^w`` keep their membership status.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .core import IdealError, Monomial, MonomialPrime, _check_ambient


@dataclass(frozen=True)
class WitnessBox:
    bounds: tuple

    def cells(self):
        return product(*(range(b + 1) for b in self.bounds))

    def enlarged(self, by):
        return WitnessBox(tuple(b + by for b in self.bounds))

    def __len__(self):
        size = 1
        for b in self.bounds:
            size *= b + 1
        return size


def _gens(I):
    if I.is_zero():
        raise IdealError("oracle called on the zero ideal")
    return [tuple(g.exponents) for g in I.gens]


def _max_exponents(gens, n):
    return tuple(max(g[i] for g in gens) for i in range(n))


def ass_box(I):
    return WitnessBox(_max_exponents(_gens(I), I.ambient.n))


def socle_box(J, s):
    return WitnessBox(tuple(s * m for m in _max_exponents(_gens(J), J.ambient.n)))


def _fits(budget, g):
    return all(b >= x for b, x in zip(budget, g))


def _member_power(a, gens, s):
    """Is x^a divisible by a product of ``s`` generators (with repetition)?"""

    def search(start, left, budget):
        if left == 0:
            return True
        for j in range(start, len(gens)):
            g = gens[j]
            if _fits(budget, g):
                if search(j, left - 1, tuple(b - x for b, x in zip(budget, g))):
                    return True
        return False

    return search(0, s, tuple(a))


def member_bruteforce(u, I, s=1):
    _check_ambient(u.ambient, I.ambient)
    if s < 1:
        raise ValueError("s must be >= 1")
    return _member_power(u.exponents, _gens(I), s)


def _is_colon_equal_prime(w, gens, F):
    # (I : w) contains each x_i, i in F ...
    for i in F:
        wi = list(w)
        wi[i] += 1
        if not any(_fits(wi, g) for g in gens):
            return False
    # ... and every generator g / gcd(g, w) of (I : w) involves a variable of F
    return all(any(g[i] > w[i] for i in F) for g in gens)


def witness_search_ass(P, I, box=None):
    """A monomial ``w`` with ``(I : w) = P``, or None."""
    _check_ambient(P.ambient, I.ambient)
    gens = _gens(I)
    if any(not any(g) for g in gens):
        raise IdealError("oracle called on the unit ideal")
    box = box or ass_box(I)
    for w in box.cells():
        if _is_colon_equal_prime(w, gens, P.support):
            return Monomial(I.ambient, w)
    return None


def socle_witness_search(J, s, box=None):
    """``x^a`` outside ``J^s`` with every ``x_i x^a`` inside, or None."""
    gens = _gens(J)
    if any(not any(g) for g in gens):
        raise IdealError("oracle called on the unit ideal")
    box = box or socle_box(J, s)
    n = J.ambient.n
    seen = {}

    def inside(a):
        if a not in seen:
            seen[a] = _member_power(a, gens, s)
        return seen[a]

    for a in box.cells():
        if inside(a):
            continue
        if all(inside(a[:i] + (a[i] + 1,) + a[i + 1:]) for i in range(n)):
            return Monomial(J.ambient, a)
    return None


def ass_bruteforce(I):
    supp = sorted({i for g in _gens(I) for i, e in enumerate(g) if e})
    found = []
    for k in range(1, len(supp) + 1):
        for F in combinations(supp, k):
            P = MonomialPrime(I.ambient, F)
            if witness_search_ass(P, I) is not None:
                found.append(P)
    return tuple(found)
