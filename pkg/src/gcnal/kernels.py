"""Hot numeric kernels: numba-jitted loops with a pure-numpy twin.

The selection path (pairwise distances, k-center greedy) is the only part
of the pipeline that is loop-bound rather than BLAS-bound, so those two
kernels get @njit twins.  Set ``GCNAL_DISABLE_NUMBA=1`` to force the numpy
path; the numpy path is also used automatically when numba is missing.
``benchmarks/bench_kernels.py`` compares the two lanes.
"""

from __future__ import annotations

import os

import numpy as np


def _numba_requested() -> bool:
    return os.environ.get("GCNAL_DISABLE_NUMBA", "").strip().lower() not in {
        "1",
        "true",
        "yes",
    }


def _pairwise_sqdist_numpy(xa: np.ndarray, xb: np.ndarray) -> np.ndarray:
    # |a-b|^2 = |a|^2 + |b|^2 - 2ab; clip kills the small negatives the
    # expansion can produce.
    na = np.einsum("ij,ij->i", xa, xa)
    nb = np.einsum("ij,ij->i", xb, xb)
    out = na[:, None] + nb[None, :] - 2.0 * (xa @ xb.T)
    return np.clip(out, 0.0, None, out=out)


def _kcenter_greedy_numpy(
    anchors: np.ndarray, candidates: np.ndarray, budget: int
) -> tuple[np.ndarray, np.ndarray]:
    mind = _pairwise_sqdist_numpy(candidates, anchors).min(axis=1)
    picks = np.empty(budget, dtype=np.int64)
    pick_sqdist = np.empty(budget, dtype=np.float64)
    for j in range(budget):
        i = int(np.argmax(mind))  # first occurrence == lowest position on ties
        picks[j] = i
        pick_sqdist[j] = mind[i]
        diff = candidates - candidates[i]
        np.minimum(mind, np.einsum("ij,ij->i", diff, diff), out=mind)
        mind[i] = -1.0  # removed from the pool, never re-picked
    return picks, pick_sqdist


try:
    if not _numba_requested():
        raise ImportError("numba disabled via GCNAL_DISABLE_NUMBA")
    from numba import njit

    USING_NUMBA = True

    @njit(cache=True)
    def _pairwise_sqdist_numba(xa, xb):
        n, m = xa.shape[0], xb.shape[0]
        dim = xa.shape[1]
        out = np.empty((n, m), dtype=np.float64)
        for i in range(n):
            for j in range(m):
                s = 0.0
                for k in range(dim):
                    d = xa[i, k] - xb[j, k]
                    s += d * d
                out[i, j] = s
        return out

    @njit(cache=True)
    def _kcenter_greedy_numba(anchors, candidates, budget):
        n = candidates.shape[0]
        dim = candidates.shape[1]
        mind = np.empty(n, dtype=np.float64)
        for i in range(n):
            best = np.inf
            for a in range(anchors.shape[0]):
                s = 0.0
                for k in range(dim):
                    d = candidates[i, k] - anchors[a, k]
                    s += d * d
                if s < best:
                    best = s
            mind[i] = best
        picks = np.empty(budget, dtype=np.int64)
        pick_sqdist = np.empty(budget, dtype=np.float64)
        for j in range(budget):
            bi = 0
            bv = -1.0
            for i in range(n):
                if mind[i] > bv:
                    bv = mind[i]
                    bi = i
            picks[j] = bi
            pick_sqdist[j] = bv
            mind[bi] = -1.0
            for i in range(n):
                if mind[i] < 0.0:
                    continue
                s = 0.0
                for k in range(dim):
                    d = candidates[i, k] - candidates[bi, k]
                    s += d * d
                if s < mind[i]:
                    mind[i] = s
        return picks, pick_sqdist

    pairwise_sqdist_kernel = _pairwise_sqdist_numba
    kcenter_greedy_kernel = _kcenter_greedy_numba
except ImportError:
    USING_NUMBA = False
    pairwise_sqdist_kernel = _pairwise_sqdist_numpy
    kcenter_greedy_kernel = _kcenter_greedy_numpy
