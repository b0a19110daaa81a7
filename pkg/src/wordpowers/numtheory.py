"""Small modular arithmetic and the prime-modulus avoiding-word construction."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import isqrt
from typing import Tuple

from .detectors import find_congruential_power
from .words import Word


class NotPrimeError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def _require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise NotPrimeError(f"{p} is not an odd prime")


def element_order(x: int, p: int) -> int:
    """Multiplicative order of ``x`` modulo the prime ``p``."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    x %= p
    if x == 0:
        raise ValueError("0 has no multiplicative order")
    order, acc = 1, x
    while acc != 1:
        acc = acc * x % p
        order += 1
    return order


def find_generator(p: int) -> int:
    """Smallest primitive root modulo the prime ``p``."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p == 2:
        return 1
    for g in range(2, p):
        if element_order(g, p) == p - 1:
            return g
    raise AssertionError("every prime has a primitive root")


def is_qr(a: int, p: int) -> bool:
    """Euler's criterion; ``a`` must be a unit modulo the odd prime ``p``."""
    _require_odd_prime(p)
    if a % p == 0:
        raise ValueError("0 is neither a residue nor a non-residue")
    return pow(a, (p - 1) // 2, p) == 1


@dataclass(frozen=True)
class PengParams:
    p: int
    g: int
    c: int
    a: int
    word_len: int

    def to_dict(self) -> dict:
        return asdict(self)


def peng_params(p: int) -> PengParams:
    """Deterministic parameters: ``c`` is the square of the least generator,
    ``a`` the least residue of the class required by ``p mod 8``."""
    _require_odd_prime(p)
    g = find_generator(p)
    c = g * g % p
    want_residue = p % 8 in (5, 7)
    a = next(x for x in range(1, p) if is_qr(x, p) == want_residue)
    return PengParams(p=p, g=g, c=c, a=a, word_len=p * p - p - 1)


def construct_peng(p: int) -> Tuple[PengParams, Word]:
    """Word of length ``p^2 - p - 1`` over ``{0..p-1}`` with no two adjacent
    equal-length blocks whose sums agree mod ``p``.

    The letters are first differences of ``e(i) = c^i + a*i^2 (mod p)``.
    """
    params = peng_params(p)
    c, a = params.c, params.a
    e = [(pow(c, i, p) + a * i * i) % p for i in range(1, p * p - p + 1)]
    word = tuple((e[i + 1] - e[i]) % p for i in range(len(e) - 1))
    if find_congruential_power(word, 2, p) is not None:
        raise RuntimeError(f"construction for p={p} contains a congruential square")
    return params, word
