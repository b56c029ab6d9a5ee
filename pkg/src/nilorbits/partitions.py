"""Integer partitions and the parity classes labelling classical nilpotent orbits."""

from __future__ import annotations

import enum
import re
from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator


class EpsClass(enum.Enum):
    A = 0
    PLUS = 1
    MINUS = -1

    @classmethod
    def coerce(cls, value) -> "EpsClass":
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            key = value.strip().upper()
            aliases = {"A": cls.A, "PLUS": cls.PLUS, "+": cls.PLUS, "SO": cls.PLUS, "1": cls.PLUS,
                       "MINUS": cls.MINUS, "-": cls.MINUS, "SP": cls.MINUS, "-1": cls.MINUS}
            if key in aliases:
                return aliases[key]
        return cls(value)


class Partition(tuple):
    """Non-increasing tuple of positive integers.

    Construct through ``make_partition`` (which sorts and drops zeros) or
    ``parse_partition``; the constructor itself only validates.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        for i, p in enumerate(self):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {tuple(self)}")
            if i and self[i - 1] < p:
                raise ValueError(f"parts must be non-increasing, got {tuple(self)}")
        return self

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return format_partition(self)


def make_partition(raw: Iterable[int]) -> Partition:
    raw = [int(x) for x in raw]
    if any(x < 0 for x in raw):
        raise ValueError(f"negative entry in {raw}")
    return Partition(sorted((x for x in raw if x), reverse=True))


_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse "2^3,1" style input. Parentheses are tolerated; "" and "()" give the empty partition."""
    s = text.strip().strip("()").replace(" ", "")
    if not s:
        return Partition()
    out = []
    for tok in s.split(","):
        m = _TERM.match(tok)
        if not m:
            raise ValueError(f"bad partition term {tok!r} in {text!r}")
        out += [int(m.group(1))] * int(m.group(2) or 1)
    return make_partition(out)


def format_partition(lam: Iterable[int]) -> str:
    return ",".join(str(p) for p in lam)


def format_compact(lam: Iterable[int]) -> str:
    """Exponent notation, e.g. (3,2,2,1,1,1) -> "3,2^2,1^3"."""
    items = []
    for value, count in sorted(Counter(lam).items(), reverse=True):
        items.append(f"{value}^{count}" if count > 1 else str(value))
    return ",".join(items)


def dual(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    out = []
    j = len(lam)
    for i in range(1, lam[0] + 1):
        while lam[j - 1] < i:
            j -= 1
        out.append(j)
    return Partition(out)


def _prefix_sums_padded(a, b):
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        yield sa, sb


def dominates(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff mu <= lam in dominance order."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance needs equal sizes, got {sum(lam)} and {sum(mu)}")
    return all(sl >= sm for sl, sm in _prefix_sums_padded(lam, mu))


def concat(lam: Iterable[int], mu: Iterable[int]) -> Partition:
    return Partition(sorted(tuple(lam) + tuple(mu), reverse=True))


def in_eps_class(lam: Iterable[int], eps) -> bool:
    eps = EpsClass.coerce(eps)
    if eps is EpsClass.A:
        return True
    bad = 0 if eps is EpsClass.PLUS else 1
    return all(m % 2 == 0 for v, m in Counter(lam).items() if v % 2 == bad)


def is_very_even(lam: Iterable[int]) -> bool:
    lam = tuple(lam)
    return bool(lam) and all(p % 2 == 0 for p in lam) and in_eps_class(lam, EpsClass.PLUS)


def is_rectangular(lam: Iterable[int]) -> bool:
    return len(set(lam)) <= 1


def _max_class_prefix(x: list[int], bad: int) -> int:
    # largest k such that the nonzero part of x[:k] lies in the class; zeros never matter
    odd_mult = set()
    best = 0
    for k, v in enumerate(x, start=1):
        if v and v % 2 == bad:
            odd_mult ^= {v}
        if not odd_mult:
            best = k
    return best


def collapse(lam: Iterable[int], eps) -> Partition:
    """Largest partition of the eps-class dominated by lam (lam^+ for PLUS, lam^- for MINUS).

    Iterates the reduction step on lam padded with zeros to length n: let r be
    the longest prefix in the class, lower the next part by one and raise the
    first later part of the right parity (even for PLUS, odd for MINUS).
    """
    eps = EpsClass.coerce(eps)
    if eps is EpsClass.A:
        raise ValueError("collapse needs eps PLUS or MINUS")
    lam = tuple(lam)
    return Partition(_collapse_raw(lam, eps.value))


@lru_cache(maxsize=1 << 18)
def _collapse_raw(lam: tuple[int, ...], eps: int) -> tuple[int, ...]:
    n = sum(lam)
    if eps == -1 and n % 2:
        raise ValueError(f"collapse to the symplectic class needs an even size, got {n}")
    bad = 0 if eps == 1 else 1
    x = list(lam) + [0] * (n - len(lam))
    while True:
        r = _max_class_prefix(x, bad)
        if r >= n:
            break
        x[r] -= 1
        s = r + 1
        while x[s] % 2 != bad:
            s += 1
        x[s] += 1
    while x and not x[-1]:
        x.pop()
    return tuple(x)


def brute_collapse(lam: Iterable[int], eps) -> Partition:
    """Reference: maximum of the eps-class elements dominated by lam, by exhaustive search."""
    lam = tuple(lam)
    cands = [mu for mu in enumerate_partitions(sum(lam), eps) if dominates(lam, mu)]
    tops = [mu for mu in cands if all(dominates(mu, c) for c in cands)]
    if len(tops) != 1:
        raise RuntimeError(f"no unique maximum below {lam}: {tops}")
    return tops[0]


def _gen(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for k in range(min(n, cap), 0, -1):
        for rest in _gen(n - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def _enumerate_cached(n: int, eps: int) -> tuple[Partition, ...]:
    e = EpsClass(eps)
    return tuple(Partition(p) for p in _gen(n, n) if in_eps_class(p, e))


def enumerate_partitions(n: int, eps=EpsClass.A) -> list[Partition]:
    """All partitions of n in the class, reverse-lexicographic order ((n) first)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_enumerate_cached(n, EpsClass.coerce(eps).value))


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence; independent of the enumerator."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]
