"""Pattern detectors.

Every ``find_*`` function returns the occurrence that ends first, breaking
ties by the shorter block length, or ``None`` when the word avoids the
pattern.  Positions in returned occurrences are 1-based.

The batch detectors scan one block length at a time with numpy, which keeps
them usable on prefixes of tens of thousands of letters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

SQUARE = "square"
ABELIAN = "abelian"
SUM_SQUARE = "sum-square"
CONGRUENTIAL = "congruential"
ADJACENT = "adjacent-equal-sum"

KINDS = (SQUARE, ABELIAN, SUM_SQUARE, CONGRUENTIAL, ADJACENT)


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class Occurrence:
    """``r`` adjacent blocks of length ``m`` starting at 1-based ``start``."""

    kind: str
    start: int
    m: int
    r: int
    sums: Tuple[int, ...]

    @property
    def end(self) -> int:
        return self.start + self.r * self.m - 1

    def blocks(self, word: Sequence[int]) -> list[Tuple[int, ...]]:
        s = self.start - 1
        return [tuple(word[s + i * self.m : s + (i + 1) * self.m]) for i in range(self.r)]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "start": self.start, "m": self.m, "r": self.r, "sums": list(self.sums)}


@dataclass(frozen=True)
class AdjacentPairOccurrence:
    """Factors ``w[i..j]`` and ``w[j+1..j2]`` with the same nonzero sum."""

    i: int
    j: int
    j2: int
    common_sum: int

    kind = ADJACENT

    @property
    def end(self) -> int:
        return self.j2

    def to_dict(self) -> dict:
        return {"kind": ADJACENT, "i": self.i, "j": self.j, "j_prime": self.j2, "sum": self.common_sum}


@dataclass(frozen=True)
class Pattern:
    kind: str
    r: int = 2
    k: int = 0

    def __str__(self) -> str:
        if self.kind == ABELIAN:
            return f"abelian:{self.r}"
        if self.kind == CONGRUENTIAL:
            return f"congruential:{self.r}:{self.k}"
        return self.kind


def parse_pattern(text: str) -> Pattern:
    """Parse ``square``, ``abelian:R``, ``sum-square``, ``congruential:R:K``
    or ``adjacent-equal-sum``."""
    parts = text.strip().split(":")
    kind, args = parts[0], parts[1:]
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise PatternError(f"bad pattern parameters in {text!r}") from None
    if kind in (SQUARE, SUM_SQUARE, ADJACENT) and not nums:
        return Pattern(kind)
    if kind == ABELIAN and len(nums) == 1:
        _check_r(nums[0])
        return Pattern(kind, r=nums[0])
    if kind == CONGRUENTIAL and len(nums) == 2:
        _check_r(nums[0])
        _check_k(nums[1])
        return Pattern(kind, r=nums[0], k=nums[1])
    raise PatternError(f"unknown pattern {text!r}")


def _check_r(r: int) -> None:
    if r < 2:
        raise PatternError(f"r must be at least 2, got {r}")


def _check_k(k: int) -> None:
    if k < 2:
        raise PatternError(f"k must be at least 2, got {k}")


# --------------------------------------------------------------------------
# batch scan


def _scan(n: int, r: int, starts_ok: Callable[[int], np.ndarray]) -> Optional[Tuple[int, int]]:
    """Return ``(start0, m)`` of the occurrence with least (end, m).

    ``starts_ok(m)`` gives a boolean array over 0-based starts
    ``0 .. n - r*m`` marking where an r-block factor with block length m is
    a hit.
    """
    best: Optional[Tuple[int, int, int]] = None
    m = 1
    while r * m <= n:
        if best is not None and r * m > best[0]:
            break
        ok = starts_ok(m)
        if ok.any():
            s = int(np.argmax(ok))
            end = s + r * m
            if best is None or end < best[0]:
                best = (end, m, s)
        m += 1
    if best is None:
        return None
    return best[2], best[1]


def _block_sums(prefix: np.ndarray, start0: int, m: int, r: int) -> Tuple[int, ...]:
    return tuple(int(prefix[start0 + (i + 1) * m] - prefix[start0 + i * m]) for i in range(r))


def _prefix(word: Sequence[int]) -> np.ndarray:
    out = np.zeros(len(word) + 1, dtype=np.int64)
    if len(word):
        np.cumsum(np.asarray(word, dtype=np.int64), out=out[1:])
    return out


def find_square(word: Sequence[int]) -> Optional[Occurrence]:
    w = np.asarray(word, dtype=np.int64)
    n = len(w)

    def ok(m: int) -> np.ndarray:
        eq = np.zeros(n - m + 1, dtype=np.int64)
        np.cumsum(w[:-m] == w[m:], out=eq[1:])
        return (eq[m : n - m + 1] - eq[: n - 2 * m + 1]) == m

    hit = _scan(n, 2, ok)
    if hit is None:
        return None
    s, m = hit
    return Occurrence(SQUARE, s + 1, m, 2, _block_sums(_prefix(word), s, m, 2))


def find_abelian_power(word: Sequence[int], r: int) -> Optional[Occurrence]:
    _check_r(r)
    w = np.asarray(word, dtype=np.int64)
    n = len(w)
    counts = [_prefix(w == a) for a in np.unique(w)]

    def ok(m: int) -> np.ndarray:
        span = n - r * m + 1
        good = np.ones(span, dtype=bool)
        for p in counts:
            d = p[m:] - p[:-m]
            for i in range(1, r):
                good &= d[i * m : i * m + span] == d[:span]
        return good

    hit = _scan(n, r, ok)
    if hit is None:
        return None
    s, m = hit
    return Occurrence(ABELIAN, s + 1, m, r, _block_sums(_prefix(word), s, m, r))


def find_sum_square(word: Sequence[int]) -> Optional[Occurrence]:
    prefix = _prefix(word)
    n = len(word)

    def ok(m: int) -> np.ndarray:
        d = prefix[m:] - prefix[:-m]
        span = n - 2 * m + 1
        return d[m : m + span] == d[:span]

    hit = _scan(n, 2, ok)
    if hit is None:
        return None
    s, m = hit
    return Occurrence(SUM_SQUARE, s + 1, m, 2, _block_sums(prefix, s, m, 2))


def find_congruential_power(word: Sequence[int], r: int, k: int) -> Optional[Occurrence]:
    """Blocks whose sums agree modulo ``k``; sums are reported as residues."""
    _check_r(r)
    _check_k(k)
    prefix = _prefix(word) % k
    n = len(word)

    def ok(m: int) -> np.ndarray:
        d = (prefix[m:] - prefix[:-m]) % k
        span = n - r * m + 1
        good = np.ones(span, dtype=bool)
        for i in range(1, r):
            good &= d[i * m : i * m + span] == d[:span]
        return good

    hit = _scan(n, r, ok)
    if hit is None:
        return None
    s, m = hit
    sums = tuple(x % k for x in _block_sums(prefix, s, m, r))
    return Occurrence(CONGRUENTIAL, s + 1, m, r, sums)


def find_adjacent_equal_nonzero_sum(word: Sequence[int]) -> Optional[AdjacentPairOccurrence]:
    """Adjacent factors (of any lengths) with equal nonzero sums.

    Such a pair is a triple ``a < b < c`` of prefix-sum indices whose values
    form an arithmetic progression with nonzero difference.  The occurrence
    with least ``j2``, then least ``i``, then least ``j`` is returned.
    """
    v = _prefix(word)
    values, first = np.unique(v, return_index=True)
    positions = np.arange(len(v))
    for c in range(2, len(v)):
        head = v[:c]
        want = 2 * head - v[c]
        idx = np.searchsorted(values, want)
        idx_clipped = np.minimum(idx, len(values) - 1)
        present = values[idx_clipped] == want
        a = np.where(present, first[idx_clipped], len(v))
        good = present & (a < positions[:c]) & (head != v[c])
        if good.any():
            cand = np.where(good, a, len(v))
            a_min = int(cand.min())
            b = int(np.argmax(cand == a_min))
            return AdjacentPairOccurrence(a_min + 1, b, c, int(v[c] - v[b]))
    return None


# --------------------------------------------------------------------------
# validation


def validate(occ, word: Sequence[int], k: Optional[int] = None) -> bool:
    """Re-check an occurrence directly against ``word``."""
    if isinstance(occ, AdjacentPairOccurrence):
        if not 1 <= occ.i <= occ.j < occ.j2 <= len(word):
            return False
        left = sum(word[occ.i - 1 : occ.j])
        right = sum(word[occ.j : occ.j2])
        return left == right == occ.common_sum != 0
    if occ.m < 1 or occ.r < 2 or occ.start < 1 or occ.end > len(word):
        return False
    blocks = occ.blocks(word)
    sums = [sum(b) for b in blocks]
    if occ.kind == SQUARE:
        return all(b == blocks[0] for b in blocks)
    if occ.kind == ABELIAN:
        return all(sorted(b) == sorted(blocks[0]) for b in blocks)
    if occ.kind == SUM_SQUARE:
        return all(s == sums[0] for s in sums) and list(occ.sums) == sums
    if occ.kind == CONGRUENTIAL:
        if k is None:
            raise ValueError("k is required to validate a congruential occurrence")
        res = [s % k for s in sums]
        return all(x == res[0] for x in res) and list(occ.sums) == res
    raise PatternError(f"unknown kind {occ.kind!r}")


def find(word: Sequence[int], pattern: Pattern):
    """Dispatch to the detector for ``pattern``."""
    if pattern.kind == SQUARE:
        return find_square(word)
    if pattern.kind == ABELIAN:
        return find_abelian_power(word, pattern.r)
    if pattern.kind == SUM_SQUARE:
        return find_sum_square(word)
    if pattern.kind == CONGRUENTIAL:
        return find_congruential_power(word, pattern.r, pattern.k)
    if pattern.kind == ADJACENT:
        return find_adjacent_equal_nonzero_sum(word)
    raise PatternError(f"unknown pattern kind {pattern.kind!r}")


# --------------------------------------------------------------------------
# suffix checks


def ends_with_pattern(word: Sequence[int], pattern: Pattern) -> bool:
    """True iff some occurrence of ``pattern`` ends at the last letter.

    Plain-Python suffix test used by the generic search; cost is linear in
    ``len(word)`` times the block length.
    """
    n = len(word)
    if pattern.kind == ADJACENT:
        v = list(_prefix(word))
        if n < 2:
            return False
        first: dict[int, int] = {}
        for idx, val in enumerate(v[:-1]):
            first.setdefault(val, idx)
        last = v[n]
        for b in range(1, n):
            if v[b] != last and first.get(2 * v[b] - last, n) < b:
                return True
        return False

    r = pattern.r if pattern.kind in (ABELIAN, CONGRUENTIAL) else 2
    for m in range(1, n // r + 1):
        blocks = [word[n - (i + 1) * m : n - i * m] for i in range(r)]
        if pattern.kind == SQUARE:
            hit = all(b == blocks[0] for b in blocks)
        elif pattern.kind == ABELIAN:
            key = sorted(blocks[0])
            hit = all(sorted(b) == key for b in blocks)
        elif pattern.kind == SUM_SQUARE:
            s0 = sum(blocks[0])
            hit = all(sum(b) == s0 for b in blocks)
        else:
            s0 = sum(blocks[0]) % pattern.k
            hit = all(sum(b) % pattern.k == s0 for b in blocks)
        if hit:
            return True
    return False


# --------------------------------------------------------------------------
# incremental congruential check


class StateMismatch(ValueError):
    pass


@dataclass(frozen=True)
class IncrementalState:
    """Residues ``(w1 + ... + wi) mod k`` for the word read so far."""

    r: int
    k: int
    residues: Tuple[int, ...] = field(default=(0,))

    @classmethod
    def empty(cls, r: int, k: int) -> "IncrementalState":
        _check_r(r)
        _check_k(k)
        return cls(r, k, (0,))

    @property
    def length(self) -> int:
        return len(self.residues) - 1

    def forbidden(self) -> frozenset:
        """Residues the next prefix sum must avoid."""
        y = self.residues
        n = len(y)  # index of the next prefix sum
        r, k = self.r, self.k
        out = set()
        m = 1
        while r * m <= n:
            d = (y[n - m] - y[n - 2 * m]) % k
            for j in range(2, r):
                if (y[n - j * m] - y[n - (j + 1) * m]) % k != d:
                    break
            else:
                out.add((y[n - m] + d) % k)
            m += 1
        return frozenset(out)


def extend_check(state: IncrementalState, letter: int, r: int, k: int) -> Tuple[IncrementalState, bool]:
    """Append ``letter``; report whether a congruential r-power now ends at
    the last position."""
    if (state.r, state.k) != (r, k):
        raise StateMismatch(f"state built for r={state.r}, k={state.k}, called with r={r}, k={k}")
    nxt = (state.residues[-1] + letter) % k
    created = nxt in state.forbidden()
    return IncrementalState(r, k, state.residues + (nxt,)), created
