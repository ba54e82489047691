import os
import subprocess
import sys

import numpy as np
import pytest

from assinf import _kernels
from assinf.core import _canonical

pytestmark = pytest.mark.skipif(_kernels.numba_impl is None, reason="numba unavailable")


def _sorted_unique(A):
    A = np.unique(A, axis=0)
    return np.ascontiguousarray(A[np.argsort(A.sum(axis=1), kind="stable")])


def _naive_minimal(A):
    return np.array([
        not any(j != i and (A[j] <= A[i]).all() for j in range(len(A)))
        for i in range(len(A))
    ], dtype=bool)


@pytest.mark.parametrize("seed", range(20))
def test_minimal_mask_backends_agree(seed):
    rng = np.random.default_rng(seed)
    A = _sorted_unique(rng.integers(0, 4, size=(int(rng.integers(1, 60)), int(rng.integers(1, 5)))))
    a = _kernels.numba_impl.minimal_mask(A)
    b = _kernels.numpy_impl.minimal_mask(A)
    assert np.array_equal(a, b)
    assert np.array_equal(a, _naive_minimal(A))


@pytest.mark.parametrize("seed", range(20))
def test_covered_mask_backends_agree(seed):
    rng = np.random.default_rng(100 + seed)
    n = int(rng.integers(1, 5))
    G = rng.integers(0, 4, size=(int(rng.integers(1, 10)), n)).astype(np.int64)
    C = rng.integers(0, 6, size=(int(rng.integers(1, 40)), n)).astype(np.int64)
    a = _kernels.numba_impl.covered_mask(G, C)
    b = _kernels.numpy_impl.covered_mask(G, C)
    naive = np.array([any((g <= c).all() for g in G) for c in C])
    assert np.array_equal(a, b) and np.array_equal(a, naive)


@pytest.mark.parametrize("seed", range(20))
def test_containing_mask_backends_agree(seed):
    rng = np.random.default_rng(200 + seed)
    n = int(rng.integers(1, 5))
    B = np.unique(rng.integers(0, 3, size=(int(rng.integers(1, 30)), n)), axis=0)
    B = np.ascontiguousarray(B[B.any(axis=1)], dtype=np.int64)
    if len(B) == 0:
        return
    a = _kernels.numba_impl.containing_mask(B)
    b = _kernels.numpy_impl.containing_mask(B)

    def contains(x, y):
        return all(yi == 0 or (0 < xi <= yi) for xi, yi in zip(x, y))

    naive = np.array([any(j != i and contains(B[i], B[j]) for j in range(len(B))) for i in range(len(B))])
    assert np.array_equal(a, b) and np.array_equal(a, naive)


def test_numpy_blocking_matches_unblocked(monkeypatch):
    rng = np.random.default_rng(7)
    A = _sorted_unique(rng.integers(0, 5, size=(300, 4)))
    full = _kernels.numpy_impl.minimal_mask(A)
    monkeypatch.setattr(_kernels, "_BLOCK_ELEMS", 64)
    assert np.array_equal(_kernels.numpy_impl.minimal_mask(A), full)


def test_canonical_empty_and_single():
    assert _canonical(np.zeros((0, 3), dtype=np.int64)).shape == (0, 3)
    one = _canonical(np.array([[1, 2, 0]]))
    assert one.tolist() == [[1, 2, 0]]


@pytest.mark.parametrize("flag,expected", [("1", "numpy"), ("0", "numba")])
def test_env_flag_selects_backend(flag, expected):
    env = dict(os.environ, ASSINF_DISABLE_NUMBA=flag)
    out = subprocess.run(
        [sys.executable, "-c", "import assinf; print(assinf.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == expected


def test_numpy_backend_end_to_end():
    env = dict(os.environ, ASSINF_DISABLE_NUMBA="1")
    code = (
        "from assinf import *\n"
        "A = Ambient(('x','y','z'))\n"
        "T = A.ideal(*(A.monomial(e) for e in [(1,1,0),(1,0,1),(0,1,1)]))\n"
        "r = ass_infinity(T)\n"
        "print(len(r.stable_set), r.stabilized_at, BACKEND)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["4", "2", "numpy"]
