"""Exhaustive search for the longest words avoiding a pattern.

``longest_avoiding`` computes ``l(r, k)``, the length of the longest word
over ``{0..k-1}`` with no congruential r-power mod k, together with the
lexicographically least word of that length.  Letters are tried in
increasing order and the first word reaching each new depth is kept, so the
recorded witness is the least one.

A node is one successful letter placement, i.e. one nonempty avoiding word.
An exhausted single-threaded search therefore reports the total number of
nonempty avoiding words in ``nodes``.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from . import _kernel
from .detectors import (
    CONGRUENTIAL,
    SQUARE,
    IncrementalState,
    Pattern,
    ends_with_pattern,
    extend_check,
)
from .words import Word

log = logging.getLogger(__name__)

# default cap on word length; l(r, k) is far below it for every feasible row
DEFAULT_MAX_LEN = 10_000
PROGRESS_SLICE = 50_000_000

# (r, k) -> (l, lexicographically least longest word)
GOLDEN = {
    (2, 2): (3, "010"),
    (2, 3): (7, "0102010"),
    (2, 4): (16, "0130102013101201"),
    (2, 5): (33, "010214243213143040102142432131430"),
    (2, 6): (35, "01024021240241402401024021240241402"),
    (2, 7): (47, "01021614636032312426404301021614636032312426404"),
    (3, 2): (9, "001101100"),
    (3, 3): (67, "0010210112021200102022121011202120010201012101120212001021002210112"),
    (4, 2): (88, "0011000110001001110010001100011000100111001000110001100010011100100011000110001001110011"),
}


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    r: int
    k: int
    max_len: Optional[int] = None
    node_budget: Optional[int] = None
    parallel_depth: int = 0
    threads: int = 1
    canonical: bool = False

    def __post_init__(self):
        if self.r < 2 or self.k < 2:
            raise SearchError("need r >= 2 and k >= 2")
        if self.max_len is not None and self.max_len < 1:
            raise SearchError("max_len must be positive")
        if self.node_budget is not None and self.node_budget < 1:
            raise SearchError("node budget must be positive")
        if self.parallel_depth < 0 or self.threads < 1:
            raise SearchError("bad parallel settings")


@dataclass(frozen=True)
class SearchResult:
    r: Optional[int]
    k: Optional[int]
    l: int
    witness: Word
    nodes: int
    complete: bool

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "k": self.k,
            "l": self.l,
            "witness": "".join(map(str, self.witness)) if all(0 <= a <= 9 for a in self.witness)
            else ",".join(map(str, self.witness)),
            "nodes": self.nodes,
            "complete": self.complete,
        }


def first_nonzero_letters(k: int) -> List[int]:
    """Least element of each orbit of ``{1..k-1}`` under multiplication by
    units mod k."""
    units = [u for u in range(1, k) if gcd(u, k) == 1]
    return sorted({min(u * a % k for u in units) for a in range(1, k)})


def _mask(letters: Iterable[int]) -> int:
    out = 0
    for a in letters:
        out |= 1 << a
    return out


# --------------------------------------------------------------------------
# compiled engine


def _run_kernel(cfg: SearchConfig, prefix: Sequence[int], max_len: int, budget: Optional[int],
                progress: bool) -> Tuple[int, Word, int, int]:
    run = _kernel.KernelRun(
        cfg.k, cfg.r, tuple(prefix), max_len, cfg.canonical, _mask(first_nonzero_letters(cfg.k))
    )
    start = time.monotonic()
    while True:
        limit = PROGRESS_SLICE
        if budget is not None:
            limit = min(limit, budget - run.nodes)
            if limit <= 0:
                return len(run.best_word), run.best_word, run.nodes, _kernel.PAUSED
        status = run.step(limit)
        if status != _kernel.PAUSED:
            return len(run.best_word), run.best_word, run.nodes, status
        if progress and limit == PROGRESS_SLICE:
            log.info("r=%d k=%d prefix=%s depth=%d best=%d nodes=%d elapsed=%.0fs",
                     cfg.r, cfg.k, "".join(map(str, prefix)) or "-", run.depth,
                     len(run.best_word), run.nodes, time.monotonic() - start)


def _split(cfg: SearchConfig, depth: int, max_len: int):
    """Enumerate the top of the tree in Python.

    Returns the nodes placed above ``depth``, the best word among them and
    the surviving prefixes of length ``depth`` in lexicographic order.
    """
    nodes = 0
    best: Word = ()
    leaves: List[Word] = []
    allowed_first = set(first_nonzero_letters(cfg.k))

    def walk(word: Word, state: IncrementalState):
        nonlocal nodes, best
        if len(word) == depth or len(word) == max_len:
            leaves.append(word)
            return
        for a in range(cfg.k):
            if cfg.canonical and not any(word):
                if not word and a != 0:
                    continue
                if a != 0 and a not in allowed_first:
                    continue
            nxt, created = extend_check(state, a, cfg.r, cfg.k)
            if created:
                continue
            nodes += 1
            child = word + (a,)
            if len(child) > len(best):
                best = child
            walk(child, nxt)

    walk((), IncrementalState.empty(cfg.r, cfg.k))
    return nodes, best, leaves


def longest_avoiding(cfg: SearchConfig, progress: bool = False) -> SearchResult:
    """Longest word over ``{0..k-1}`` without a congruential r-power mod k.

    When the budget runs out or the ``max_len`` cap is reached the result
    has ``complete=False`` and ``l`` is only a lower bound.
    """
    max_len = cfg.max_len or DEFAULT_MAX_LEN
    use_parallel = cfg.threads > 1 and cfg.parallel_depth > 0
    if not use_parallel:
        l, witness, nodes, status = _run_kernel(cfg, (), max_len, cfg.node_budget, progress)
        return SearchResult(cfg.r, cfg.k, l, witness, nodes, status == _kernel.EXHAUSTED)

    depth = min(cfg.parallel_depth, max_len)
    top_nodes, best, leaves = _split(cfg, depth, max_len)

    def task(prefix: Word):
        return _run_kernel(cfg, prefix, max_len, cfg.node_budget, progress)

    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
        outcomes = list(pool.map(task, leaves))

    nodes = top_nodes
    complete = True
    for l, witness, sub_nodes, status in outcomes:
        nodes += sub_nodes
        complete &= status == _kernel.EXHAUSTED
        # leaves come in lexicographic order, so keep the first at each length
        if l > len(best):
            best = witness
    return SearchResult(cfg.r, cfg.k, len(best), best, nodes, complete)


# --------------------------------------------------------------------------
# reference engine


def longest_avoiding_reference(cfg: SearchConfig) -> SearchResult:
    """Plain-Python search driven by :func:`extend_check`.

    Same node order and counts as the compiled engine; used to cross-check
    it on small rows.
    """
    max_len = cfg.max_len or DEFAULT_MAX_LEN
    budget = cfg.node_budget
    allowed_first = set(first_nonzero_letters(cfg.k))
    nodes = 0
    best: Word = ()
    stopped = False

    def walk(word: List[int], state: IncrementalState) -> None:
        nonlocal nodes, best, stopped
        for a in range(cfg.k):
            if stopped:
                return
            if cfg.canonical and not any(word):
                if not word and a != 0:
                    continue
                if a != 0 and a not in allowed_first:
                    continue
            nxt, created = extend_check(state, a, cfg.r, cfg.k)
            if created:
                continue
            nodes += 1
            word.append(a)
            if len(word) > len(best):
                best = tuple(word)
            if len(word) == max_len or (budget is not None and nodes >= budget):
                stopped = True
            else:
                walk(word, nxt)
            word.pop()

    walk([], IncrementalState.empty(cfg.r, cfg.k))
    return SearchResult(cfg.r, cfg.k, len(best), best, nodes, not stopped)


# --------------------------------------------------------------------------
# arbitrary alphabets and patterns


def _known_bounded(alphabet: Sequence[int], pattern: Pattern) -> bool:
    if pattern.kind == CONGRUENTIAL:
        return True
    if pattern.kind == SQUARE:
        return len(alphabet) <= 2
    return False


def longest_avoiding_custom(
    alphabet: Sequence[int],
    pattern: Pattern,
    max_len: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> SearchResult:
    """Depth-first search over ``alphabet`` (in the given order) for the
    longest word avoiding ``pattern``.

    Patterns that are not known to be unavoidable on the alphabet need a
    ``max_len`` or ``node_budget``; the result is then a lower bound.
    """
    alphabet = tuple(alphabet)
    if not alphabet or len(set(alphabet)) != len(alphabet):
        raise SearchError("alphabet must be nonempty with distinct letters")
    if max_len is None and node_budget is None and not _known_bounded(alphabet, pattern):
        raise SearchError(f"pattern {pattern} may be avoidable over this alphabet; give max_len or a budget")
    cap = max_len or DEFAULT_MAX_LEN
    nodes = 0
    best: Word = ()
    stopped = False

    def walk(word: List[int]) -> None:
        nonlocal nodes, best, stopped
        for a in alphabet:
            if stopped:
                return
            word.append(a)
            if not ends_with_pattern(word, pattern):
                nodes += 1
                if len(word) > len(best):
                    best = tuple(word)
                if len(word) == cap or (node_budget is not None and nodes >= node_budget):
                    stopped = True
                else:
                    walk(word)
            word.pop()

    walk([])
    k = pattern.k if pattern.kind == CONGRUENTIAL else None
    r = pattern.r if pattern.kind in (CONGRUENTIAL, "abelian") else None
    return SearchResult(r, k, len(best), best, nodes, not stopped)


# --------------------------------------------------------------------------
# table


@dataclass(frozen=True)
class TableRow:
    result: SearchResult
    expected_l: Optional[int]
    expected_witness: Optional[str]

    @property
    def match(self) -> Optional[bool]:
        if self.expected_l is None:
            return None
        return self.result.l == self.expected_l and self.result.to_dict()["witness"] == self.expected_witness

    def to_dict(self) -> dict:
        out = self.result.to_dict()
        out["expected_l"] = self.expected_l
        out["expected_witness"] = self.expected_witness
        out["match"] = self.match
        return out


def reproduce_table(rows: Iterable[Tuple[int, int]], budget: Optional[int] = None,
                    threads: int = 1, parallel_depth: int = 0, canonical: bool = False,
                    progress: bool = False) -> List[TableRow]:
    out = []
    for r, k in rows:
        cfg = SearchConfig(r, k, node_budget=budget, threads=threads,
                           parallel_depth=parallel_depth, canonical=canonical)
        result = longest_avoiding(cfg, progress=progress)
        expected = GOLDEN.get((r, k), (None, None))
        out.append(TableRow(result, *expected))
    return out
