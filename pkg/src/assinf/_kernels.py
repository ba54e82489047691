"""Inner loops over exponent matrices.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy version
with identical semantics.  The numba path is used when numba imports and the
environment variable ``ASSINF_DISABLE_NUMBA`` is unset (or ``0``); set it to
``1`` to force the numpy path.  Both sets are importable directly as
``numba_impl`` / ``numpy_impl`` for tests and benchmarks.

Exponent matrices are ``int64`` arrays of shape ``(rows, nvars)``; a row is a
monomial.
"""

import os
from types import SimpleNamespace

import numpy as np

# Cap on elements materialized by one broadcast block in the numpy path.
_BLOCK_ELEMS = 1 << 22


def _block_rows(m, n):
    return max(1, _BLOCK_ELEMS // max(1, m * n))


# -- numpy path ---------------------------------------------------------------


def _np_minimal_mask(A):
    # A: unique rows, nondecreasing degree
    m, n = A.shape
    keep = np.ones(m, dtype=bool)
    step = _block_rows(m, n)
    for i0 in range(0, m, step):
        i1 = min(m, i0 + step)
        div = (A[None, :, :] <= A[i0:i1, None, :]).all(axis=2)
        div[np.arange(i1 - i0), np.arange(i0, i1)] = False
        keep[i0:i1] = ~div.any(axis=1)
    return keep


def _np_covered_mask(G, C):
    m, n = C.shape
    out = np.zeros(m, dtype=bool)
    if G.shape[0] == 0 or m == 0:
        return out
    step = _block_rows(G.shape[0], n)
    for i0 in range(0, m, step):
        i1 = min(m, i0 + step)
        out[i0:i1] = (G[None, :, :] <= C[i0:i1, None, :]).all(axis=2).any(axis=1)
    return out


def _np_containing_mask(B):
    # B: unique bound vectors (0 = variable absent).  Row a is flagged when the
    # irreducible ideal of a contains the irreducible ideal of another row b,
    # i.e. for every i with b_i > 0 we have 0 < a_i <= b_i.
    m, n = B.shape
    out = np.zeros(m, dtype=bool)
    step = _block_rows(m, n)
    bpos = B > 0
    for i0 in range(0, m, step):
        i1 = min(m, i0 + step)
        a = B[i0:i1, None, :]
        ok = ~bpos[None, :, :] | ((a > 0) & (a <= B[None, :, :]))
        cont = ok.all(axis=2)
        cont[np.arange(i1 - i0), np.arange(i0, i1)] = False
        out[i0:i1] = cont.any(axis=1)
    return out


numpy_impl = SimpleNamespace(
    minimal_mask=_np_minimal_mask,
    covered_mask=_np_covered_mask,
    containing_mask=_np_containing_mask,
)


# -- numba path ---------------------------------------------------------------


def _build_numba():
    from numba import njit

    @njit(cache=True, nogil=True)
    def minimal_mask(A):
        m, n = A.shape
        keep = np.ones(m, dtype=np.bool_)
        kept = np.empty(m, dtype=np.int64)
        nk = 0
        for i in range(m):
            for t in range(nk):
                j = kept[t]
                div = True
                for c in range(n):
                    if A[j, c] > A[i, c]:
                        div = False
                        break
                if div:
                    keep[i] = False
                    break
            if keep[i]:
                kept[nk] = i
                nk += 1
        return keep

    @njit(cache=True, nogil=True)
    def covered_mask(G, C):
        m, n = C.shape
        out = np.zeros(m, dtype=np.bool_)
        for i in range(m):
            for j in range(G.shape[0]):
                div = True
                for c in range(n):
                    if G[j, c] > C[i, c]:
                        div = False
                        break
                if div:
                    out[i] = True
                    break
        return out

    @njit(cache=True, nogil=True)
    def containing_mask(B):
        m, n = B.shape
        out = np.zeros(m, dtype=np.bool_)
        for a in range(m):
            for b in range(m):
                if a == b:
                    continue
                cont = True
                for c in range(n):
                    if B[b, c] > 0 and (B[a, c] == 0 or B[a, c] > B[b, c]):
                        cont = False
                        break
                if cont:
                    out[a] = True
                    break
        return out

    return SimpleNamespace(
        minimal_mask=minimal_mask,
        covered_mask=covered_mask,
        containing_mask=containing_mask,
    )


try:
    numba_impl = _build_numba()
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba_impl = None

_disabled = os.environ.get("ASSINF_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

if numba_impl is not None and not _disabled:
    BACKEND = "numba"
    _impl = numba_impl
else:
    BACKEND = "numpy"
    _impl = numpy_impl


def _as_matrix(A):
    return np.ascontiguousarray(A, dtype=np.int64)


def minimal_mask(A):
    """Mask of rows not divisible by any other row.

    ``A`` must have unique rows sorted by nondecreasing total degree.
    """
    A = _as_matrix(A)
    if A.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    return _impl.minimal_mask(A)


def covered_mask(G, C):
    """Mask of rows of ``C`` divisible by at least one row of ``G``."""
    C = _as_matrix(C)
    G = _as_matrix(G)
    if C.shape[0] == 0 or G.shape[0] == 0:
        return np.zeros(C.shape[0], dtype=bool)
    return _impl.covered_mask(G, C)


def containing_mask(B):
    """Mask of irreducible bound vectors whose ideal contains another row's ideal."""
    B = _as_matrix(B)
    if B.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    return _impl.containing_mask(B)
