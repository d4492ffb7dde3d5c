"""Hot numeric kernels: modular rank and the Reider cone enumeration.

Each kernel has a numba ``@njit`` body and a pure-numpy fallback.  The numba
path is used when numba imports and ``HIRZEWAHL_DISABLE_NUMBA`` is unset (or
"0"); both paths return identical results.
"""

from __future__ import annotations

import os

import numpy as np

# 2^31 - 1; products of two residues fit in int64
MODULUS = 2147483647

try:
    import numba
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False


def numba_enabled() -> bool:
    return _HAVE_NUMBA and os.environ.get("HIRZEWAHL_DISABLE_NUMBA", "0") in ("", "0")


# ---------------------------------------------------------------- rank mod p

def _rank_mod_p_numpy(A: np.ndarray, p: int) -> int:
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(A[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, c]), p - 2, p)
        A[rank] = (A[rank] * inv) % p
        below = np.nonzero(A[rank + 1:, c])[0] + rank + 1
        if below.size:
            f = A[below, c].reshape(-1, 1)
            A[below] = (A[below] - (f * A[rank]) % p) % p
        rank += 1
    return rank


if _HAVE_NUMBA:
    @numba.njit(cache=True)
    def _powmod(x, e, p):
        r = 1
        x %= p
        while e > 0:
            if e & 1:
                r = (r * x) % p
            x = (x * x) % p
            e >>= 1
        return r

    @numba.njit(cache=True)
    def _rank_mod_p_numba(A, p):
        rows, cols = A.shape
        for i in range(rows):
            for j in range(cols):
                A[i, j] %= p
        rank = 0
        for c in range(cols):
            if rank == rows:
                break
            piv = -1
            for r in range(rank, rows):
                if A[r, c] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(cols):
                    tmp = A[rank, j]
                    A[rank, j] = A[piv, j]
                    A[piv, j] = tmp
            inv = _powmod(A[rank, c], p - 2, p)
            for j in range(c, cols):
                A[rank, j] = (A[rank, j] * inv) % p
            for r in range(rank + 1, rows):
                f = A[r, c]
                if f != 0:
                    for j in range(c, cols):
                        A[r, j] = (A[r, j] - f * A[rank, j]) % p
            rank += 1
        return rank


def rank_mod_p(A: np.ndarray, p: int = MODULUS) -> int:
    """Rank of an integer matrix over GF(p); never exceeds the rational rank."""
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return 0
    if numba_enabled():
        return int(_rank_mod_p_numba(A.copy(), p))
    return _rank_mod_p_numpy(A, p)


# ------------------------------------------------------- Reider cone enumeration
#
# Curves Gamma = alpha*C0 + beta*F - sum n_j E_j with alpha >= 1, beta >= alpha*n,
# 0 <= n_j <= alpha, alpha <= alpha_max, beta <= beta_max.  For each we evaluate
# N.Gamma and Gamma^2 and flag the Reider exclusion cases:
#   N.G = 0 and G^2 in {-1, -2};  N.G = 1 and G^2 in {0, -1};  N.G = 2 and G^2 = 0.
# Returned: min N.Gamma, the number of hits, and the first hit (alpha, beta, n...).

def _is_reider_hit(dot, sq):
    return ((dot == 0 and (sq == -1 or sq == -2))
            or (dot == 1 and (sq == 0 or sq == -1))
            or (dot == 2 and sq == 0))


if _HAVE_NUMBA:
    _is_reider_hit_nb = numba.njit(cache=True)(_is_reider_hit)

    @numba.njit(cache=True)
    def _reider_scan_numba(aN, bN, mN, n, alpha_max, beta_max):
        delta = mN.shape[0]
        best = np.iinfo(np.int64).max
        hits = 0
        witness = np.zeros(2 + delta, dtype=np.int64)
        nv = np.zeros(delta, dtype=np.int64)
        for alpha in range(1, alpha_max + 1):
            for beta in range(alpha * n, beta_max + 1):
                base_dot = aN * (beta - alpha * n) + alpha * bN
                base_sq = -n * alpha * alpha + 2 * alpha * beta
                for j in range(delta):
                    nv[j] = 0
                while True:
                    dot = base_dot
                    sq = base_sq
                    for j in range(delta):
                        dot -= mN[j] * nv[j]
                        sq -= nv[j] * nv[j]
                    if dot < best:
                        best = dot
                    if _is_reider_hit_nb(dot, sq):
                        if hits == 0:
                            witness[0] = alpha
                            witness[1] = beta
                            for j in range(delta):
                                witness[2 + j] = nv[j]
                        hits += 1
                    # odometer over n_j in [0, alpha]
                    j = 0
                    while j < delta and nv[j] == alpha:
                        nv[j] = 0
                        j += 1
                    if j == delta:
                        break
                    nv[j] += 1
        return best, hits, witness


def _reider_scan_numpy(aN, bN, mN, n, alpha_max, beta_max):
    delta = len(mN)
    mN = np.asarray(mN, dtype=np.int64)
    best = np.iinfo(np.int64).max
    hits = 0
    witness = np.zeros(2 + delta, dtype=np.int64)
    for alpha in range(1, alpha_max + 1):
        if alpha * n > beta_max:
            continue
        betas = np.arange(alpha * n, beta_max + 1, dtype=np.int64)
        grids = np.meshgrid(*([np.arange(alpha + 1, dtype=np.int64)] * delta), indexing="ij")
        nvs = np.stack([g.ravel() for g in grids], axis=1) if delta else np.zeros((1, 0), np.int64)
        e_dot = nvs @ mN if delta else np.zeros(1, np.int64)
        e_sq = (nvs * nvs).sum(axis=1) if delta else np.zeros(1, np.int64)
        dot = (aN * (betas - alpha * n) + alpha * bN)[:, None] - e_dot[None, :]
        sq = (-n * alpha * alpha + 2 * alpha * betas)[:, None] - e_sq[None, :]
        best = min(best, int(dot.min()))
        mask = (((dot == 0) & ((sq == -1) | (sq == -2)))
                | ((dot == 1) & ((sq == 0) | (sq == -1)))
                | ((dot == 2) & (sq == 0)))
        count = int(mask.sum())
        if count and hits == 0:
            # numba iterates beta outer, n_j odometer inner with n_0 fastest
            order = np.argwhere(mask)
            keys = [(int(bi),) + tuple(int(x) for x in nvs[ni][::-1]) for bi, ni in order]
            bi, ni = order[min(range(len(keys)), key=keys.__getitem__)]
            witness[0] = alpha
            witness[1] = betas[bi]
            witness[2:] = nvs[ni]
        hits += count
    return best, hits, witness


def reider_cone_scan(aN: int, bN: int, mN, n: int, alpha_max: int, beta_max: int):
    """Brute-force scan of the curve cone; returns (min N.Gamma, hits, witness)."""
    mN = np.asarray(list(mN), dtype=np.int64)
    if numba_enabled():
        best, hits, w = _reider_scan_numba(int(aN), int(bN), mN, int(n),
                                           int(alpha_max), int(beta_max))
    else:
        best, hits, w = _reider_scan_numpy(int(aN), int(bN), mN, int(n),
                                           int(alpha_max), int(beta_max))
    witness = tuple(int(x) for x in w) if hits else None
    return int(best), int(hits), witness
