"""Slow, obviously-correct oracles used to check the real implementations.

Nothing here imports from ``wordpowers``: blocks are compared letter by
letter and sums are recomputed from scratch for every candidate.
"""

from itertools import product


def _blocks(word, start0, m, r):
    return [word[start0 + i * m : start0 + (i + 1) * m] for i in range(r)]


def _is_hit(blocks, kind, k):
    if kind == "square":
        return all(b == blocks[0] for b in blocks)
    if kind == "abelian":
        return all(sorted(b) == sorted(blocks[0]) for b in blocks)
    if kind == "sum-square":
        return all(sum(b) == sum(blocks[0]) for b in blocks)
    if kind == "congruential":
        return all((sum(b) - sum(blocks[0])) % k == 0 for b in blocks)
    raise ValueError(kind)


def first_block_power(word, kind, r=2, k=None):
    """(start, m) of the occurrence with least (end, m), 1-based start."""
    word = list(word)
    n = len(word)
    for end in range(1, n + 1):
        for m in range(1, end // r + 1):
            start0 = end - r * m
            if _is_hit(_blocks(word, start0, m, r), kind, k):
                return start0 + 1, m
    return None


def first_adjacent_pair(word):
    """(i, j, j2, s) with least j2, then i, then j; sums recomputed directly."""
    word = list(word)
    n = len(word)
    for j2 in range(2, n + 1):
        for i in range(1, j2):
            for j in range(i, j2):
                left = sum(word[i - 1 : j])
                right = sum(word[j:j2])
                if left == right != 0:
                    return i, j, j2, left
    return None


def avoids(word, kind, r=2, k=None):
    if kind == "adjacent-equal-sum":
        return first_adjacent_pair(word) is None
    return first_block_power(word, kind, r, k) is None


def all_avoiding_words(k, r, length):
    """Every word of ``length`` over {0..k-1} avoiding congruential r-powers."""
    return [w for w in product(range(k), repeat=length) if avoids(w, "congruential", r, k)]


def count_avoiding_words(k, r, max_length):
    """Number of nonempty avoiding words, grown level by level."""
    level = [()]
    total = 0
    for _ in range(max_length):
        level = [w + (a,) for w in level for a in range(k)
                 if first_block_power(w + (a,), "congruential", r, k) is None]
        if not level:
            break
        total += len(level)
    return total, level


def has_ap(values, t):
    values = sorted(set(values))
    s = set(values)
    for i, a in enumerate(values):
        for b in values[i + 1 :]:
            d = b - a
            if all(a + j * d in s for j in range(t)):
                return True
    return False


def omega_brute(t, k, n_max):
    """Least n <= n_max with every interval choice containing a t-term AP."""
    for n in range(1, n_max + 1):
        choices = product(*[range(i * k + 1, (i + 1) * k + 1) for i in range(n)])
        if all(has_ap(c, t) for c in choices):
            return n
    return None


def w1_brute(t, k, n_max):
    for n in range(1, n_max + 1):
        ok = True
        for coloring in product((0, 1), repeat=n):
            red = [i + 1 for i, c in enumerate(coloring) if c == 0]
            blue_run = any(all(coloring[s + j] == 1 for j in range(k)) for s in range(n - k + 1))
            if not has_ap(red, t) and not blue_run:
                ok = False
                break
        if ok:
            return n
    return None
