"""Prime characteristic and arithmetic in the prime field F_p."""

from __future__ import annotations

from dataclasses import dataclass

MAX_PRIME = 2**31 - 1


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Characteristic:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p <= MAX_PRIME:
            raise ValueError(f"characteristic must be an integer in [2, 2^31-1], got {self.p!r}")
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")

    def reduce(self, c: int) -> int:
        return c % self.p

    def inverse(self, c: int) -> int:
        c %= self.p
        if c == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return pow(c, self.p - 2, self.p)

    def __int__(self):
        return self.p
