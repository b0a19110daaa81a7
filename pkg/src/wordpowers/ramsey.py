"""Monochromatic progressions, the extraction procedures built on them, and
brute-force values of small van der Waerden-type quantities."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Hashable, List, Optional, Sequence, Tuple

from .detectors import ABELIAN, CONGRUENTIAL, Occurrence, find_abelian_power, validate
from .reports import Check, Report
from .search import SearchConfig, longest_avoiding
from .words import parikh


class BudgetExceeded(RuntimeError):
    """A brute-force enumeration ran past its node budget."""


@dataclass(frozen=True)
class ApWitness:
    n: int
    d: int
    t: int

    def positions(self) -> List[int]:
        return [self.n + i * self.d for i in range(self.t)]

    def to_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "t": self.t}


def find_mono_ap(colors: Sequence[Hashable], t: int, base: int = 1) -> Optional[ApWitness]:
    """Monochromatic ``t``-term progression with least start, then least
    difference.  ``colors[0]`` is the color of index ``base``."""
    if t < 2:
        raise ValueError("t must be at least 2")
    n = len(colors)
    by_color = defaultdict(list)
    for i, c in enumerate(colors):
        by_color[c].append(i)
    for s, c in enumerate(colors):
        for p in by_color[c]:
            if p <= s:
                continue
            d = p - s
            if s + (t - 1) * d >= n:
                break
            if all(colors[s + j * d] == c for j in range(2, t)):
                return ApWitness(s + base, d, t)
    return None


def check_witness(colors: Sequence[Hashable], ap: ApWitness, base: int = 1) -> bool:
    idx = [p - base for p in ap.positions()]
    if ap.d < 1 or idx[0] < 0 or idx[-1] >= len(colors):
        return False
    return all(colors[i] == colors[idx[0]] for i in idx)


# --------------------------------------------------------------------------
# running-sum extraction


def extract_congruential(word: Sequence[int], r: int, k: int) -> Optional[Occurrence]:
    """A congruential r-power mod k whose blocks all sum to 0 mod k.

    Colors index ``i`` by the prefix sum ``w1 + ... + wi`` mod k; an
    (r+1)-term monochromatic progression ``n, n+d, ..., n+rd`` gives the
    factor ``w[n+1 .. n+rd]`` split into r blocks of length d.
    """
    if r < 2 or k < 2:
        raise ValueError("need r >= 2 and k >= 2")
    colors = [0]
    for a in word:
        colors.append((colors[-1] + a) % k)
    ap = find_mono_ap(colors, r + 1, base=0)
    if ap is None:
        return None
    occ = Occurrence(CONGRUENTIAL, ap.n + 1, ap.d, r, (0,) * r)
    if not validate(occ, word, k):
        raise RuntimeError(f"extracted occurrence {occ} does not validate")
    return occ


# --------------------------------------------------------------------------
# Parikh-deviation extraction


@dataclass(frozen=True)
class RationalVector:
    """Vector ``numerators / denominator`` with exact entries."""

    numerators: Tuple[int, ...]
    denominator: int

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("denominator must be positive")

    @classmethod
    def of(cls, *entries) -> "RationalVector":
        fracs = [Fraction(e) for e in entries]
        den = lcm(*(f.denominator for f in fracs)) if fracs else 1
        return cls(tuple(int(f * den) for f in fracs), den)

    def __len__(self) -> int:
        return len(self.numerators)

    def entries(self) -> List[Fraction]:
        return [Fraction(x, self.denominator) for x in self.numerators]


def _check_vector(v: RationalVector) -> None:
    if sum(v.numerators) != v.denominator:
        raise ValueError(f"entries of v must sum to 1, got {sum(v.entries())}")


def gamma_color(word: Sequence[int], v: RationalVector, i: int) -> Tuple[int, ...]:
    """Color of index ``i`` computed from scratch."""
    counts = parikh(word[:i], len(v))
    dev = [v.denominator * c - i * x for c, x in zip(counts, v.numerators)]
    return tuple(dev[l] - dev[m] for l, m in combinations(range(len(v)), 2))


def gamma_coloring(word: Sequence[int], v: RationalVector) -> List[Tuple[int, ...]]:
    """Colors of indices ``0 .. len(word)``.

    Index i gets the pairwise differences of ``L * (parikh(w[1..i]) - i*v)``
    where L is the common denominator of v, so colors are integer tuples.
    """
    _check_vector(v)
    k = len(v)
    pairs = list(combinations(range(k), 2))
    dev = [0] * k
    out = [tuple(0 for _ in pairs)]
    for pos, a in enumerate(word, start=1):
        if not 0 <= a < k:
            raise ValueError(f"letter {a} at position {pos} outside [0, {k})")
        dev[a] += v.denominator
        for j in range(k):
            dev[j] -= v.numerators[j]
        out.append(tuple(dev[l] - dev[m] for l, m in pairs))
    return out


def extract_abelian_power(word: Sequence[int], v: RationalVector, alpha: int) -> Optional[Occurrence]:
    """An abelian ``alpha``-power each of whose blocks has Parikh vector d*v."""
    if alpha < 2:
        raise ValueError("alpha must be at least 2")
    colors = gamma_coloring(word, v)
    ap = find_mono_ap(colors, alpha + 1, base=0)
    if ap is None:
        return None
    d = ap.d
    blocks = [word[ap.n + i * d : ap.n + (i + 1) * d] for i in range(alpha)]
    want = [Fraction(d * x, v.denominator) for x in v.numerators]
    for b in blocks:
        if list(parikh(b, len(v))) != want:
            raise RuntimeError(f"block {b} does not have Parikh vector {want}")
    occ = Occurrence(ABELIAN, ap.n + 1, d, alpha, tuple(sum(b) for b in blocks))
    if not validate(occ, word):
        raise RuntimeError(f"extracted occurrence {occ} does not validate")
    return occ


# --------------------------------------------------------------------------
# brute-force Ramsey-type numbers

DEFAULT_CAP = 25
DEFAULT_BUDGET = 50_000_000


def _closes_ap(chosen: set, x: int, t: int) -> bool:
    """Does ``x``, larger than every element of ``chosen``, complete a
    t-term progression inside ``chosen | {x}``?"""
    for e in chosen:
        d = x - e
        if all(x - j * d in chosen for j in range(2, t)):
            return True
    return False


def omega(t: int, k: int, n_cap: int = DEFAULT_CAP, node_budget: int = DEFAULT_BUDGET) -> Optional[int]:
    """Least n such that every choice ``x_i`` in ``[(i-1)k+1, ik]``,
    ``i = 1..n``, contains a t-term arithmetic progression.

    Returns ``None`` if no such n is at most ``n_cap``.
    """
    if t < 3 or k < 1:
        raise ValueError("need t >= 3 and k >= 1")
    longest = 0
    nodes = 0
    chosen: set = set()

    def walk(i: int) -> bool:
        # i choices made so far; True means an AP-free choice of length n_cap exists
        nonlocal longest, nodes
        if i == n_cap:
            return True
        for x in range(i * k + 1, (i + 1) * k + 1):
            if _closes_ap(chosen, x, t):
                continue
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded(f"omega({t},{k}) exceeded {node_budget} nodes")
            longest = max(longest, i + 1)
            chosen.add(x)
            done = walk(i + 1)
            chosen.discard(x)
            if done:
                return True
        return False

    if walk(0):
        return None
    return longest + 1


def w1(t: int, k: int, n_cap: int = DEFAULT_CAP, node_budget: int = DEFAULT_BUDGET) -> Optional[int]:
    """Least n such that every red/blue coloring of ``[1, n]`` has a red
    t-term progression or k consecutive blue integers."""
    if t < 3 or k < 1:
        raise ValueError("need t >= 3 and k >= 1")
    longest = 0
    nodes = 0
    red: set = set()

    def walk(i: int, blue_run: int) -> bool:
        nonlocal longest, nodes
        if i == n_cap:
            return True
        x = i + 1
        options = []
        if not _closes_ap(red, x, t):
            options.append("red")
        if blue_run + 1 < k:
            options.append("blue")
        for color in options:
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded(f"w1({t},{k}) exceeded {node_budget} nodes")
            longest = max(longest, x)
            if color == "red":
                red.add(x)
                done = walk(x, 0)
                red.discard(x)
            else:
                done = walk(x, blue_run + 1)
            if done:
                return True
        return False

    if walk(0, 0):
        return None
    return longest + 1


def check_w1_bound(k: int, n_cap: int = DEFAULT_CAP, node_budget: int = DEFAULT_BUDGET) -> Report:
    """Compare w1(3, k) with k * omega(3, k)."""
    om = omega(3, k, n_cap * max(k, 1), node_budget)
    w = w1(3, k, n_cap * max(k, 1), node_budget)
    report = Report(f"w1-bound k={k}")
    ok = om is not None and w is not None and w <= k * om
    report.checks.append(Check("w1(3,k) <= k*omega(3,k)", ok, {"w1": w, "omega": om, "k_times_omega": None if om is None else k * om}))
    return report


def check_lemma_bounds(k: int, t: int, n_cap: int = DEFAULT_CAP, node_budget: int = DEFAULT_BUDGET,
                       search_budget: Optional[int] = None) -> Report:
    """Compare ``L(k, t) = l(t, k) + 1`` with ``omega(t+1, k // 2) - 1``.

    For t = 2 this is the bound for congruential squares.  A failing check
    would point to a bug in one of the two computations.
    """
    report = Report(f"lemma-bounds k={k} t={t}")
    result = longest_avoiding(SearchConfig(t, k, node_budget=search_budget, canonical=True))
    big_l = result.l + 1
    half = k // 2
    om = omega(t + 1, half, n_cap, node_budget) if half >= 1 else None
    detail = {
        "l": result.l,
        "L": big_l,
        "L_exact": result.complete,
        "omega_args": [t + 1, half],
        "omega": om,
        "rhs": None if om is None else om - 1,
    }
    if not result.complete or om is None:
        # an incomplete search still gives a lower bound on L
        report.note = "partial: search or omega enumeration hit its cap"
    report.checks.append(Check("L(k,t) >= omega(t+1, k//2) - 1", om is not None and big_l >= om - 1, detail))
    return report
