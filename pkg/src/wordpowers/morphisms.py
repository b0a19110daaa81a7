"""Morphisms, codings and fixed-point prefixes.

Letters are ints.  The primed zero used by ``PHI`` and ``ZETA`` is encoded
as :data:`ZERO_PRIME` (the int 2) so that detectors see it as a letter
distinct from 0; :func:`display` prints it as ``0'``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from .detectors import find_adjacent_equal_nonzero_sum, find_square
from .reports import Check, Report
from .words import Word, prefix_sums

ZERO_PRIME = 2


class MorphismError(ValueError):
    pass


@dataclass(frozen=True)
class Morphism:
    images: Mapping[int, Word]
    names: Mapping[int, str] = field(default_factory=dict)

    @property
    def alphabet(self) -> tuple:
        return tuple(self.images)

    def name_of(self, letter: int) -> str:
        return self.names.get(letter, str(letter))

    def is_prolongable(self, seed: int) -> bool:
        image = self.images.get(seed, ())
        return len(image) >= 2 and image[0] == seed


@dataclass(frozen=True)
class Coding:
    table: Mapping[int, int]


PHI = Morphism(
    {
        0: (0, 1, ZERO_PRIME, -1),
        1: (0, 1, -1, 1),
        ZERO_PRIME: (ZERO_PRIME, -1, 0, 1),
        -1: (ZERO_PRIME, -1, 1, -1),
    },
    {ZERO_PRIME: "0'"},
)

ZETA = Morphism(
    {
        0: (0, 1, ZERO_PRIME, -1),
        ZERO_PRIME: (0, 1, ZERO_PRIME, -1),
        1: (0, 1, -1, 1, ZERO_PRIME, -1),
        -1: (1, -1),
    },
    {ZERO_PRIME: "0'"},
)

PSI = Morphism(
    {
        0: (0, 1, 0, -1),
        1: (0, 1, -1, 1, 0, -1),
        -1: (1, -1),
    }
)

TAU = Coding({0: 0, ZERO_PRIME: 0, 1: 1, -1: -1})

BUILTIN_MORPHISMS: Dict[str, Morphism] = {"phi": PHI, "zeta": ZETA, "psi": PSI}
BUILTIN_CODINGS: Dict[str, Coding] = {"tau": TAU}


def apply(m: Morphism, word: Iterable[int]) -> Word:
    out: List[int] = []
    for a in word:
        try:
            out.extend(m.images[a])
        except KeyError:
            raise MorphismError(f"letter {m.name_of(a)} is not in the morphism's alphabet") from None
    return tuple(out)


def apply_coding(c: Coding, word: Iterable[int]) -> Word:
    try:
        return tuple(c.table[a] for a in word)
    except KeyError as exc:
        raise MorphismError(f"letter {exc.args[0]} is not in the coding's domain") from None


def power(m: Morphism, n: int, word: Sequence[int]) -> Word:
    """``m`` applied ``n`` times to ``word``."""
    word = tuple(word)
    for _ in range(n):
        word = apply(m, word)
    return word


def fixed_point_prefix(m: Morphism, seed: int, n: int) -> Word:
    """First ``n`` letters of the fixed point of ``m`` starting with ``seed``."""
    if not m.is_prolongable(seed):
        raise MorphismError(f"morphism is not prolongable on {m.name_of(seed)}")
    word: Word = (seed,)
    while len(word) < n:
        grown = apply(m, word[:n])
        if len(grown) <= len(word):
            raise MorphismError("fixed point does not grow (erasing images)")
        word = grown
    return word[:n]


def map_to_sigma_k(word: Iterable[int], k: int) -> Word:
    """Send -1 to k-1, keeping 0 and 1."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    out = []
    for pos, a in enumerate(word, start=1):
        if a not in (-1, 0, 1):
            raise ValueError(f"letter {a} at position {pos} is not in {{-1, 0, 1}}")
        out.append(k - 1 if a == -1 else a)
    return tuple(out)


def display(word: Iterable[int], m: Optional[Morphism] = None) -> str:
    names = m.names if m is not None else {ZERO_PRIME: "0'"}
    return " ".join(names.get(a, str(a)) for a in word)


def parse_morphism(text: str) -> tuple[Morphism, int]:
    """Read ``letter -> l1 l2 ...`` lines; returns the morphism and the first
    letter defined (used as the default seed).

    Integer tokens stand for themselves.  Any other token (``0'``, ``a``)
    gets a fresh integer code above the largest integer token.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise MorphismError(f"line {lineno}: expected 'letter -> image'")
        lhs, rhs = line.split("->", 1)
        lhs_tokens = lhs.split()
        if len(lhs_tokens) != 1:
            raise MorphismError(f"line {lineno}: expected exactly one letter before '->'")
        rows.append((lineno, lhs_tokens[0], rhs.split()))
    if not rows:
        raise MorphismError("no morphism rules found")

    tokens = [t for _, lhs, rhs in rows for t in [lhs, *rhs]]
    ints = [int(t) for t in tokens if _is_int(t)]
    next_code = max(ints + [0]) + 1
    codes: Dict[str, int] = {}
    names: Dict[int, str] = {}
    for t in tokens:
        if t in codes:
            continue
        if _is_int(t):
            codes[t] = int(t)
        else:
            codes[t] = next_code
            names[next_code] = t
            next_code += 1

    images: Dict[int, Word] = {}
    for lineno, lhs, rhs in rows:
        letter = codes[lhs]
        if letter in images:
            raise MorphismError(f"line {lineno}: letter {lhs} defined twice")
        images[letter] = tuple(codes[t] for t in rhs)
    undefined = {t for _, _, rhs in rows for t in rhs if codes[t] not in images}
    if undefined:
        raise MorphismError(f"image letters without a rule: {', '.join(sorted(undefined))}")
    return Morphism(images, names), codes[rows[0][1]]


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


# --------------------------------------------------------------------------
# verification reports


def _first_mismatch(u: Sequence[int], v: Sequence[int]) -> Optional[int]:
    for i, (a, b) in enumerate(zip(u, v), start=1):
        if a != b:
            return i
    if len(u) != len(v):
        return min(len(u), len(v)) + 1
    return None


def _compare(name: str, left: Word, right: Word) -> Check:
    pos = _first_mismatch(left, right)
    detail = {"left_length": len(left), "right_length": len(right)}
    if pos is not None:
        detail["first_mismatch"] = pos
    return Check(name, pos is None, detail)


def verify_zeta_lemma(n_max: int) -> Report:
    """Check phi^n(zeta(a)) == zeta^(n+1)(a) for every letter and
    phi^n(0) == zeta^n(0), for all n <= n_max."""
    report = Report("zeta-lemma", note="finite check up to n_max")
    letters = sorted(PHI.alphabet)
    for n in range(n_max + 1):
        for a in letters:
            left = power(PHI, n, ZETA.images[a])
            right = power(ZETA, n + 1, (a,))
            check = _compare(f"phi^{n}(zeta({PHI.name_of(a)})) = zeta^{n + 1}({PHI.name_of(a)})", left, right)
            report.checks.append(check)
            if not check.passed:
                return report
        check = _compare(f"phi^{n}(0) = zeta^{n}(0)", power(PHI, n, (0,)), power(ZETA, n, (0,)))
        report.checks.append(check)
        if not check.passed:
            return report
    return report


def verify_tau_phi_psi(n_max: int) -> Report:
    """Check tau(phi^n(0)) == psi^n(0) for all n <= n_max."""
    report = Report("tau-phi-psi", note="finite check up to n_max")
    left: Word = (0,)
    right: Word = (0,)
    for n in range(n_max + 1):
        if n:
            left = apply(PHI, left)
            right = apply(PSI, right)
        check = _compare(f"tau(phi^{n}(0)) = psi^{n}(0)", apply_coding(TAU, left), right)
        report.checks.append(check)
        if not check.passed:
            break
    return report


def distinct_factors(word: Sequence[int], length: int) -> int:
    word = tuple(word)
    return len({word[i : i + length] for i in range(len(word) - length + 1)})


def verify_psi_prefix(n: int) -> Report:
    """Certify the length-``n`` prefix of the fixed point of ``PSI``: it is
    squarefree, its running sums stay in {0, 1}, and it has no adjacent
    factors with equal nonzero sums."""
    word = fixed_point_prefix(PSI, 0, n)
    report = Report("psi-prefix", note=f"certifies the prefix of length {n} only, not the infinite word")

    sq = find_square(word)
    report.checks.append(Check("squarefree", sq is None, {} if sq is None else {"occurrence": sq.to_dict()}))

    sums = prefix_sums(word)
    bad = next((i for i, s in enumerate(sums) if s not in (0, 1)), None)
    detail = {"values": sorted(Counter(sums))}
    if bad is not None:
        detail["first_bad_index"] = bad
    report.checks.append(Check("running sums in {0,1}", bad is None, detail))

    adj = find_adjacent_equal_nonzero_sum(word)
    report.checks.append(
        Check("no adjacent equal nonzero sums", adj is None, {} if adj is None else {"occurrence": adj.to_dict()})
    )
    report.checks.append(
        Check("distinct factors of length 25", True, {"count": distinct_factors(word, 25)})
    )
    return report
