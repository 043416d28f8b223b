"""Compiled round loops for the lock-step searches.

All k logical workers enter every trial with the same grid, so the kernels
keep a single shared grid, evaluate the k proposals against it and apply the
swap of the selected source. Random draws are read from the same raw streams
the Python reference consumes, in the same order, so both paths produce
identical runs.
"""
from __future__ import annotations

import numpy as np
from numba import njit

_TWO_M53 = 2.0 ** -53

# st layout
COST, BEST, AVG_COST, SA, MYUB = 0, 1, 2, 3, 4
# prm layout
K, MT1, MT2, MAX_COST, MC1, MC2, WL1, WL2, DENOM, VARIANT = range(10)
# stats layout
TRIALS, SWAP_ROUNDS, UPHILL_ROUNDS, BREAK_ROUNDS = range(4)


@njit(cache=True)
def local_costs(dist, nbr, ncnt, grid, a, b):
    pa = grid[a]
    pb = grid[b]
    lc = 0
    nlc = 0
    for j in range(ncnt[a]):
        m = nbr[a, j]
        q = grid[m]
        lc += dist[pa, q]
        if m == b:
            nlc += dist[pb, pa]
        else:
            nlc += dist[pb, q]
    for j in range(ncnt[b]):
        m = nbr[b, j]
        q = grid[m]
        lc += dist[pb, q]
        if m == a:
            nlc += dist[pa, pb]
        else:
            nlc += dist[pa, q]
    return lc, nlc


@njit(cache=True)
def _draw_pair(bufs, pos, w, n):
    a = np.int64(bufs[w, pos[w]] % np.uint64(n))
    b = np.int64(bufs[w, pos[w] + 1] % np.uint64(n - 1))
    pos[w] += 2
    if b >= a:
        b += 1
    return a, b


@njit(cache=True)
def _pick(cbuf, cpos, cand, m):
    if m == 1:
        return cand[0]
    j = np.int64(cbuf[cpos[0]] % np.uint64(m))
    cpos[0] += 1
    return cand[j]


@njit(cache=True)
def alg_chunk(dist, nbr, ncnt, grid, best_grid, st, prm, bufs, pos, cbuf, cpos,
              max_rounds, reserve, traj, stats):
    k = prm[K]
    n = grid.shape[0]
    width = bufs.shape[1]
    pa = np.empty(k, np.int64)
    pb = np.empty(k, np.int64)
    lcs = np.empty(k, np.int64)
    nlcs = np.empty(k, np.int64)
    cand = np.empty(k, np.int64)
    done = 0
    while done < max_rounds:
        if cpos[0] + 1 > cbuf.shape[0]:
            break
        short = False
        for w in range(k):
            if pos[w] + reserve > width:
                short = True
        if short:
            break

        if prm[VARIANT] == 1:
            cap = (8 * st[AVG_COST]) // prm[DENOM] + st[MYUB]
        else:
            cap = prm[MAX_COST] + st[MYUB]
        nrt = 0
        while True:
            nrt += 1
            m = 0
            for w in range(k):
                a, b = _draw_pair(bufs, pos, w, n)
                lc, nlc = local_costs(dist, nbr, ncnt, grid, a, b)
                pa[w] = a
                pb[w] = b
                lcs[w] = lc
                nlcs[w] = nlc
                if nlc <= lc:
                    cand[m] = w
                    m += 1
            if m == 0 and nrt >= prm[MT1]:
                for w in range(k):
                    if nlcs[w] <= cap and st[COST] + nlcs[w] - lcs[w] <= st[BEST] + prm[MC2]:
                        cand[m] = w
                        m += 1
                if m > 0:
                    stats[UPHILL_ROUNDS] += 1
            if m > 0:
                src = _pick(cbuf, cpos, cand, m)
                a = pa[src]
                b = pb[src]
                tmp = grid[a]
                grid[a] = grid[b]
                grid[b] = tmp
                st[COST] += nlcs[src] - lcs[src]
                stats[SWAP_ROUNDS] += 1
                break
            if nrt >= prm[MT2]:
                stats[BREAK_ROUNDS] += 1
                break
        stats[TRIALS] += nrt

        if prm[VARIANT] == 1:
            st[AVG_COST] = st[COST]
        if st[COST] < st[BEST]:
            st[BEST] = st[COST]
            best_grid[:] = grid
        st[SA] += 1
        if st[MYUB] == 0:
            if st[SA] == prm[WL1]:
                st[SA] = 0
                st[MYUB] = prm[MC1]
        else:
            if st[SA] == prm[WL2]:
                st[SA] = 0
                st[MYUB] = 0
        if traj.shape[0] > 0:
            traj[done] = st[BEST]
        done += 1
    return done


@njit(cache=True)
def lspar_chunk(dist, nbr, ncnt, grid, best_grid, st, k, pr, bufs, pos, cbuf, cpos,
                max_rounds, traj, stats):
    n = grid.shape[0]
    pa = np.empty(k, np.int64)
    pb = np.empty(k, np.int64)
    newc = np.empty(k, np.int64)
    moved = np.empty(k, np.bool_)
    cand = np.empty(k, np.int64)
    for r in range(max_rounds):
        for w in range(k):
            a, b = _draw_pair(bufs, pos, w, n)
            lc, nlc = local_costs(dist, nbr, ncnt, grid, a, b)
            pa[w] = a
            pb[w] = b
            if nlc < lc:
                moved[w] = True
            else:
                u = np.float64(bufs[w, pos[w]] >> np.uint64(11)) * _TWO_M53
                pos[w] += 1
                moved[w] = u <= pr
            if moved[w]:
                newc[w] = st[COST] + nlc - lc
            else:
                newc[w] = st[COST]
        lo = newc[0]
        for w in range(1, k):
            if newc[w] < lo:
                lo = newc[w]
        m = 0
        for w in range(k):
            if newc[w] == lo:
                cand[m] = w
                m += 1
        src = _pick(cbuf, cpos, cand, m)
        stats[TRIALS] += 1
        if moved[src]:
            a = pa[src]
            b = pb[src]
            tmp = grid[a]
            grid[a] = grid[b]
            grid[b] = tmp
            st[COST] = newc[src]
            stats[SWAP_ROUNDS] += 1
        if st[COST] < st[BEST]:
            st[BEST] = st[COST]
            best_grid[:] = grid
        if traj.shape[0] > 0:
            traj[r] = st[BEST]
    return max_rounds
