"""Irreducible and primary decomposition of monomial ideals; Ass and Min."""

from dataclasses import dataclass
import os

import numpy as np

from . import _kernels
from .core import IdealError, MonomialIdeal, MonomialPrime, _canonical, intersect, sorted_primes


@dataclass(frozen=True)
class IrreducibleComponent:
    """The ideal ``(x_i^{b_i} : b_i > 0)``; a zero bound means the variable is absent."""

    ambient: object
    bounds: tuple

    @property
    def support(self):
        return tuple(i for i, b in enumerate(self.bounds) if b)

    @property
    def radical(self):
        return MonomialPrime(self.ambient, self.support)

    def sort_key(self):
        return (len(self.support), self.support, self.bounds)

    def as_ideal(self):
        n = self.ambient.n
        rows = [[b if j == i else 0 for j in range(n)] for i, b in enumerate(self.bounds) if b]
        return MonomialIdeal(self.ambient, np.array(rows, dtype=np.int64).reshape(-1, n))

    def __str__(self):
        return str(self.as_ideal())


@dataclass(frozen=True)
class PrimaryComponent:
    ideal: MonomialIdeal
    radical: MonomialPrime

    def as_ideal(self):
        return self.ideal

    def __str__(self):
        return str(self.ideal)


@dataclass(frozen=True)
class Decomposition:
    components: tuple
    irredundant: bool

    def intersection(self):
        return intersect(*(c.as_ideal() for c in self.components))

    def radicals(self):
        return sorted_primes(c.radical for c in self.components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)


def _require_proper(I):
    if I.is_zero():
        raise IdealError("decomposition of the zero ideal")
    if I.is_unit():
        raise IdealError("decomposition of the unit ideal")


def _split_leaves(A):
    """Bound vectors of the leaves of the splitting recursion on gens ``A``."""
    n = A.shape[1]
    leaves = set()
    seen = set()
    stack = [A]
    while stack:
        A = stack.pop()
        key = A.tobytes()
        if key in seen:
            continue
        seen.add(key)
        mixed = np.flatnonzero((A > 0).sum(axis=1) > 1)
        if mixed.size == 0:
            leaves.add(tuple(A.max(axis=0).tolist()))
            continue
        # first mixed generator in canonical order; split off its lowest variable
        u = A[mixed[0]]
        i = int(np.flatnonzero(u)[0])
        u1 = np.zeros(n, dtype=np.int64)
        u1[i] = u[i]
        u2 = u.copy()
        u2[i] = 0
        stack.append(_canonical(np.vstack([A, u2])))
        stack.append(_canonical(np.vstack([A, u1])))
    return leaves


def irreducible_decomposition(I):
    """Irredundant decomposition of ``I`` into irreducible monomial ideals.

    Built by splitting a mixed generator ``u = x_i^a * v`` into
    ``(I + x_i^a) ∩ (I + v)`` until only pure powers remain, then dropping
    every leaf that contains another leaf.  For irreducible monomial ideals,
    containing an intersection of monomial ideals forces containing one of
    them, so this is exactly the removal of redundant components.
    """
    _require_proper(I)
    leaves = _split_leaves(I.matrix)
    B = np.array(sorted(leaves), dtype=np.int64).reshape(-1, I.ambient.n)
    B = B[~_kernels.containing_mask(B)]
    comps = sorted(
        (IrreducibleComponent(I.ambient, tuple(row)) for row in B.tolist()),
        key=IrreducibleComponent.sort_key,
    )
    dec = Decomposition(tuple(comps), irredundant=True)
    if os.environ.get("ASSINF_DEBUG"):
        assert dec.intersection() == I, f"decomposition does not reassemble {I}"
    return dec


def primary_decomposition(I):
    """Group the irreducible components by radical and intersect each group."""
    groups = {}
    for comp in irreducible_decomposition(I):
        groups.setdefault(comp.radical, []).append(comp.as_ideal())
    comps = tuple(
        PrimaryComponent(intersect(*groups[P]), P) for P in sorted_primes(groups)
    )
    return Decomposition(comps, irredundant=True)


def ass(I):
    """Associated primes of ``I``, canonically sorted."""
    return irreducible_decomposition(I).radicals()


def minimal_primes(primes):
    """Inclusion-minimal members of a collection of primes."""
    primes = sorted_primes(primes)
    return tuple(
        P for P in primes
        if not any(Q != P and set(Q.support) <= set(P.support) for Q in primes)
    )


def min_primes(I):
    return minimal_primes(ass(I))
