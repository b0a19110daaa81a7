"""Compiled depth-first search for words avoiding congruential r-powers.

The search walks prefix sums modulo k instead of letters: appending letter
``a`` sets ``y[n+1] = y[n] + a (mod k)``, and a congruential r-power ends
at the new position exactly when ``y[n+1-r*m], ..., y[n+1]`` is an
arithmetic progression mod k for some block length ``m``.  For every depth
the kernel stores the set of forbidden next residues as a bitmask, so each
child costs O(1) and each node O(n).

The kernel is resumable: all state lives in caller-owned arrays and
:func:`run` returns after ``limit`` placements so the caller can log
progress or enforce a budget.
"""

from __future__ import annotations

import numpy as np
from numba import njit

RUNNING = 0
EXHAUSTED = 1
REACHED_MAX = 2
PAUSED = 3

# indices into the state vector
N, BEST_LEN, NODES, STATUS = 0, 1, 2, 3


@njit(cache=True, nogil=True)
def forbidden_mask(y, top, r, k):
    """Bitmask of residues that ``y[top]`` must avoid, given ``y[:top]``."""
    msk = 0
    m = 1
    while r * m <= top:
        d = (y[top - m] - y[top - 2 * m]) % k
        ok = True
        for j in range(2, r):
            if (y[top - j * m] - y[top - (j + 1) * m]) % k != d:
                ok = False
                break
        if ok:
            msk |= np.int64(1) << ((y[top - m] + d) % k)
        m += 1
    return msk


@njit(cache=True, nogil=True)
def run(k, r, base, max_len, canon, first_nonzero, y, w, nxt, masks, zeros, best, state, limit):
    n = state[N]
    placed_here = 0
    while True:
        a = nxt[n]
        found = False
        while a < k:
            if canon and zeros[n]:
                if n == 0 and a != 0:
                    a = k
                    break
                if a != 0 and not (first_nonzero >> a) & 1:
                    a += 1
                    continue
            if not (masks[n] >> ((y[n] + a) % k)) & 1:
                found = True
                break
            a += 1
        if not found:
            if n == base:
                state[N] = n
                state[STATUS] = EXHAUSTED
                return
            n -= 1
            continue

        nxt[n] = a + 1
        w[n] = a
        y[n + 1] = (y[n] + a) % k
        zeros[n + 1] = zeros[n] and a == 0
        n += 1
        state[NODES] += 1
        placed_here += 1
        if n > state[BEST_LEN]:
            state[BEST_LEN] = n
            best[:n] = w[:n]
        if n == max_len:
            state[N] = n
            state[STATUS] = REACHED_MAX
            return
        masks[n] = forbidden_mask(y, n + 1, r, k)
        nxt[n] = 0
        if placed_here >= limit:
            state[N] = n
            state[STATUS] = PAUSED
            return


class KernelRun:
    """Owns the arrays for one resumable search rooted at ``prefix``."""

    def __init__(self, k, r, prefix, max_len, canon=False, first_nonzero=0):
        if k > 62:
            raise ValueError("the compiled search supports k <= 62")
        self.k, self.r = k, r
        self.base = len(prefix)
        self.max_len = max_len
        self.canon = canon
        self.first_nonzero = first_nonzero
        size = max_len + 2
        self.y = np.zeros(size, np.int64)
        self.w = np.zeros(size, np.int64)
        self.nxt = np.zeros(size, np.int64)
        self.masks = np.zeros(size, np.int64)
        self.zeros = np.zeros(size, np.bool_)
        self.best = np.zeros(size, np.int64)
        self.zeros[0] = True
        for i, a in enumerate(prefix):
            self.w[i] = a
            self.y[i + 1] = (self.y[i] + a) % k
            self.zeros[i + 1] = self.zeros[i] and a == 0
        self.best[: self.base] = self.w[: self.base]
        self.masks[self.base] = forbidden_mask(self.y, self.base + 1, r, k)
        self.state = np.array([self.base, self.base, 0, RUNNING], np.int64)
        if self.base >= max_len:
            self.state[STATUS] = REACHED_MAX

    @property
    def status(self) -> int:
        return int(self.state[STATUS])

    @property
    def nodes(self) -> int:
        return int(self.state[NODES])

    @property
    def depth(self) -> int:
        return int(self.state[N])

    @property
    def best_word(self) -> tuple:
        return tuple(int(a) for a in self.best[: self.state[BEST_LEN]])

    def step(self, limit: int) -> int:
        if self.status in (EXHAUSTED, REACHED_MAX):
            return self.status
        self.state[STATUS] = RUNNING
        run(
            self.k, self.r, self.base, self.max_len, self.canon, self.first_nonzero,
            self.y, self.w, self.nxt, self.masks, self.zeros, self.best, self.state, max(1, limit),
        )
        return self.status
