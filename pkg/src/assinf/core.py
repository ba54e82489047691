"""Monomials and monomial ideals over a fixed ordered set of variables.

Values are immutable.  An ideal is stored as its minimal generating set in
canonical order: total degree ascending, ties broken lexicographically with
the first ambient variable most significant (so ``x^2`` precedes ``x*y``
precedes ``y^2``).  Two ideals are equal iff these representations agree.

The coefficient field never appears; nothing here depends on it.
"""

from dataclasses import dataclass
from functools import lru_cache, reduce
import re

import numpy as np

from . import _kernels

EXP_MAX = int(np.iinfo(np.int64).max)

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class AmbientMismatchError(ValueError):
    """Operands live over different variable sets."""


class ExponentOverflowError(OverflowError):
    """An exponent left the int64 range."""


class IdealError(ValueError):
    """An operation received an ideal outside its domain (zero, unit, ...)."""


@dataclass(frozen=True)
class Ambient:
    """Ordered, duplicate-free tuple of variable names."""

    vars: tuple

    def __post_init__(self):
        names = tuple(self.vars)
        object.__setattr__(self, "vars", names)
        if not names:
            raise ValueError("an ambient needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @property
    def n(self):
        return len(self.vars)

    def index(self, name):
        try:
            return self.vars.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    def one(self):
        return Monomial(self, (0,) * self.n)

    def var(self, name):
        exps = [0] * self.n
        exps[self.index(name)] = 1
        return Monomial(self, tuple(exps))

    def monomial(self, exponents=None, **by_name):
        """Build a monomial from an exponent sequence or from keyword exponents."""
        if exponents is None:
            exps = [0] * self.n
            for name, e in by_name.items():
                exps[self.index(name)] = e
            return Monomial(self, tuple(exps))
        return Monomial(self, tuple(exponents))

    def ideal(self, *gens):
        return minimalize(gens, ambient=self)

    def zero_ideal(self):
        return MonomialIdeal(self, np.zeros((0, self.n), dtype=np.int64))

    def unit_ideal(self):
        return MonomialIdeal(self, np.zeros((1, self.n), dtype=np.int64))

    def prime(self, *names):
        return MonomialPrime(self, tuple(self.index(v) for v in names))

    def restrict(self, indices):
        return Ambient(tuple(self.vars[i] for i in indices))

    def __str__(self):
        return " ".join(self.vars)


def _check_ambient(a, b):
    if a != b:
        raise AmbientMismatchError(f"ambient mismatch: [{a}] vs [{b}]")


def _format_exponents(ambient, exps):
    parts = []
    for name, e in zip(ambient.vars, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Monomial:
    ambient: Ambient
    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != self.ambient.n:
            raise ValueError(f"expected {self.ambient.n} exponents, got {len(exps)}")
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent in {exps}")
            if e > EXP_MAX:
                raise ExponentOverflowError(f"exponent {e} exceeds {EXP_MAX}")

    @property
    def degree(self):
        return sum(self.exponents)

    @property
    def support(self):
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_one(self):
        return not any(self.exponents)

    def sort_key(self):
        return (self.degree, tuple(-e for e in self.exponents))

    def __mul__(self, other):
        _check_ambient(self.ambient, other.ambient)
        return Monomial(self.ambient, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self):
        return _format_exponents(self.ambient, self.exponents)

    def __repr__(self):
        return f"Monomial({self})"


def divides(u, v):
    _check_ambient(u.ambient, v.ambient)
    return all(a <= b for a, b in zip(u.exponents, v.exponents))


def lcm(u, v):
    _check_ambient(u.ambient, v.ambient)
    return Monomial(u.ambient, tuple(map(max, u.exponents, v.exponents)))


def gcd(u, v):
    _check_ambient(u.ambient, v.ambient)
    return Monomial(u.ambient, tuple(map(min, u.exponents, v.exponents)))


def _canonical(A):
    """Sort rows canonically, drop duplicates and non-minimal rows."""
    A = np.ascontiguousarray(A, dtype=np.int64)
    if A.shape[0] <= 1:
        return A.copy()
    deg = A.sum(axis=1)
    order = np.lexsort(np.vstack([-A[:, ::-1].T, deg]))
    A = A[order]
    fresh = np.ones(A.shape[0], dtype=bool)
    fresh[1:] = (A[1:] != A[:-1]).any(axis=1)
    A = A[fresh]
    return np.ascontiguousarray(A[_kernels.minimal_mask(A)])


class MonomialIdeal:
    """A monomial ideal, stored by its canonical minimal generators.

    The constructor minimalizes whatever exponent rows it is given.  An empty
    generator matrix is the zero ideal; the single row of zeros is the unit
    ideal.
    """

    __slots__ = ("ambient", "_gens", "_hash")

    def __init__(self, ambient, exponents):
        A = np.asarray(exponents, dtype=np.int64).reshape(-1, ambient.n)
        if (A < 0).any():
            raise ValueError("negative exponent")
        A = _canonical(A)
        A.setflags(write=False)
        self.ambient = ambient
        self._gens = A
        self._hash = None

    @property
    def matrix(self):
        """Read-only ``(len(G(I)), n)`` exponent matrix in canonical order."""
        return self._gens

    @property
    def gens(self):
        return tuple(Monomial(self.ambient, tuple(row)) for row in self._gens.tolist())

    def __len__(self):
        return self._gens.shape[0]

    def is_zero(self):
        return self._gens.shape[0] == 0

    def is_unit(self):
        return self._gens.shape[0] == 1 and not self._gens.any()

    @property
    def support(self):
        """Indices of variables occurring in some generator."""
        return tuple(np.flatnonzero(self._gens.any(axis=0)).tolist())

    def max_exponents(self):
        if self.is_zero():
            return (0,) * self.ambient.n
        return tuple(self._gens.max(axis=0).tolist())

    def issubset(self, other):
        """Containment of ideals: every generator of ``self`` lies in ``other``."""
        _check_ambient(self.ambient, other.ambient)
        return bool(_kernels.covered_mask(other._gens, self._gens).all())

    def __contains__(self, u):
        return member(u, self)

    def __mul__(self, other):
        return product(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __pow__(self, s):
        return power(self, s)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ambient == other.ambient and np.array_equal(self._gens, other._gens)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient, self._gens.shape, self._gens.tobytes()))
        return self._hash

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(_format_exponents(self.ambient, row) for row in self._gens.tolist()) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"


@dataclass(frozen=True)
class MonomialPrime:
    """The prime generated by the variables with indices in ``support``."""

    ambient: Ambient
    support: tuple

    def __post_init__(self):
        support = tuple(sorted(set(int(i) for i in self.support)))
        object.__setattr__(self, "support", support)
        if not support:
            raise ValueError("a monomial prime needs at least one variable")
        if support[0] < 0 or support[-1] >= self.ambient.n:
            raise ValueError(f"support {support} out of range for {self.ambient.n} variables")

    @property
    def names(self):
        return tuple(self.ambient.vars[i] for i in self.support)

    def __len__(self):
        return len(self.support)

    def sort_key(self):
        return (len(self.support), self.support)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def issubset(self, other):
        _check_ambient(self.ambient, other.ambient)
        return set(self.support) <= set(other.support)

    def as_ideal(self):
        return MonomialIdeal(self.ambient, np.eye(self.ambient.n, dtype=np.int64)[list(self.support)])

    def __str__(self):
        return "(" + ", ".join(self.names) + ")"

    def __repr__(self):
        return f"MonomialPrime{self}"


def sorted_primes(primes):
    return tuple(sorted(set(primes), key=MonomialPrime.sort_key))


def minimalize(gens, ambient=None):
    """Ideal generated by ``gens``; ``ambient`` is required when ``gens`` is empty."""
    gens = list(gens)
    if ambient is None:
        if not gens:
            raise ValueError("ambient required for an empty generator list")
        ambient = gens[0].ambient
    for g in gens:
        _check_ambient(ambient, g.ambient)
    A = np.array([g.exponents for g in gens], dtype=np.int64).reshape(-1, ambient.n)
    return MonomialIdeal(ambient, A)


def member(u, I):
    _check_ambient(u.ambient, I.ambient)
    row = np.array([u.exponents], dtype=np.int64)
    return bool(_kernels.covered_mask(I.matrix, row)[0])


def _check_sum(A, B):
    if A.size and B.size and int(A.max()) + int(B.max()) > EXP_MAX:
        raise ExponentOverflowError("exponent overflow in product")


def product(I, J):
    _check_ambient(I.ambient, J.ambient)
    A, B = I.matrix, J.matrix
    _check_sum(A, B)
    S = (A[:, None, :] + B[None, :, :]).reshape(-1, I.ambient.n)
    return MonomialIdeal(I.ambient, S)


@lru_cache(maxsize=512)
def _power_cached(I, s):
    if s == 1:
        return I
    return product(_power_cached(I, s - 1), I)


def power(I, s, allow_zero=False):
    """``I^s`` by repeated multiplication; results are memoized per ``(I, s)``.

    ``s = 0`` gives the unit ideal only when ``allow_zero`` is set.
    """
    if isinstance(s, bool) or int(s) != s:
        raise TypeError(f"power must be an integer, got {s!r}")
    s = int(s)
    if s == 0 and allow_zero:
        return I.ambient.unit_ideal()
    if s < 1:
        raise ValueError(f"power must be >= 1, got {s}")
    if I.matrix.size and int(I.matrix.max()) * s > EXP_MAX:
        raise ExponentOverflowError(f"exponent overflow in power {s}")
    # fill the cache bottom-up so the recursion never goes deep
    for t in range(1, s):
        _power_cached(I, t)
    return _power_cached(I, s)


def _intersect2(I, J):
    _check_ambient(I.ambient, J.ambient)
    A, B = I.matrix, J.matrix
    L = np.maximum(A[:, None, :], B[None, :, :]).reshape(-1, I.ambient.n)
    return MonomialIdeal(I.ambient, L)


def intersect(*ideals):
    """Intersection, folded left pairwise."""
    if not ideals:
        raise ValueError("intersect needs at least one ideal")
    return reduce(_intersect2, ideals)


def colon_mon(I, u):
    """``(I : u)`` for a monomial ``u``."""
    _check_ambient(I.ambient, u.ambient)
    A = I.matrix - np.array(u.exponents, dtype=np.int64)[None, :]
    return MonomialIdeal(I.ambient, np.maximum(A, 0))


def colon_prime(I, P):
    """``(I : P)``: intersection of ``(I : x_i)`` over the variables of ``P``."""
    _check_ambient(I.ambient, P.ambient)
    amb = I.ambient
    return intersect(*(colon_mon(I, amb.var(amb.vars[i])) for i in P.support))


def _resolve_indices(ambient, F):
    if isinstance(F, MonomialPrime):
        _check_ambient(ambient, F.ambient)
        return F.support
    idx = set()
    for f in F:
        idx.add(ambient.index(f) if isinstance(f, str) else int(f))
    idx = tuple(sorted(idx))
    if idx and (idx[0] < 0 or idx[-1] >= ambient.n):
        raise ValueError(f"variable indices {idx} out of range")
    return idx


def localize_restrict(I, F):
    """Set every variable outside ``F`` to 1; the result lives over ``F`` only.

    ``F`` may be a MonomialPrime, variable names, or indices.
    """
    idx = _resolve_indices(I.ambient, F)
    if not idx:
        raise ValueError("restriction to an empty variable set")
    sub = I.ambient.restrict(idx)
    return MonomialIdeal(sub, I.matrix[:, list(idx)])


def min_gen_degree(I):
    if I.is_zero():
        raise IdealError("min_gen_degree of the zero ideal")
    return int(I.matrix.sum(axis=1).min())
