"""Nilpotent orbits: algebras, orbit labels, dimensions, closure order, littleness, rigidity."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Union

from .partitions import (
    EpsClass,
    Partition,
    collapse,
    dominates,
    dual,
    enumerate_partitions,
    format_partition,
    in_eps_class,
    is_very_even,
    make_partition,
    parse_partition,
)

EXCEPTIONAL_DIMS = {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}
EXCEPTIONAL_RANKS = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}
CLASSICAL = ("sl", "so", "sp")


class OrbitError(ValueError):
    pass


@dataclass(frozen=True)
class Algebra:
    """A simple Lie algebra. For classical families `n` is the matrix size (sp4 has n=4)."""

    family: str
    n: int | None = None

    def __post_init__(self):
        if self.family in CLASSICAL:
            if self.n is None or self.n < 1:
                raise OrbitError(f"{self.family} needs a positive matrix size")
            if self.family == "sp" and self.n % 2:
                raise OrbitError(f"sp needs an even matrix size, got {self.n}")
        elif self.family in EXCEPTIONAL_DIMS:
            if self.n is not None:
                raise OrbitError(f"{self.family} takes no size parameter")
        else:
            raise OrbitError(f"unknown algebra family {self.family!r}")

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL

    @property
    def eps(self) -> EpsClass:
        return {"sl": EpsClass.A, "so": EpsClass.PLUS, "sp": EpsClass.MINUS}[self.family]

    @property
    def rank(self) -> int:
        if self.family == "sl":
            return self.n - 1
        if self.family in ("so", "sp"):
            return self.n // 2
        return EXCEPTIONAL_RANKS[self.family]

    @property
    def root_type(self) -> tuple[str, int]:
        """Cartan type, e.g. so8 -> ("D", 4), sp6 -> ("C", 3)."""
        if self.family == "sl":
            return "A", self.n - 1
        if self.family == "sp":
            return "C", self.n // 2
        if self.family == "so":
            return ("B" if self.n % 2 else "D"), self.n // 2
        return self.family, EXCEPTIONAL_RANKS[self.family]

    def __str__(self) -> str:
        return f"{self.family}{self.n}" if self.is_classical else self.family


def parse_algebra(text: str) -> Algebra:
    s = text.strip()
    if s.upper() in EXCEPTIONAL_DIMS:
        return Algebra(s.upper())
    m = re.fullmatch(r"(sl|so|sp)(\d+)", s.lower())
    if not m:
        raise OrbitError(f"cannot parse algebra {text!r}; expected e.g. sl6, so8, sp4, E7")
    return Algebra(m.group(1), int(m.group(2)))


def algebra_from_type(type_name: str) -> Algebra:
    """Cartan type name ("D6", "A4", "C3", "E7") to the algebra."""
    t = type_name.strip().upper()
    if t in EXCEPTIONAL_DIMS:
        return Algebra(t)
    letter, rank = t[0], int(t[1:])
    size = {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[letter]
    return Algebra({"A": "sl", "B": "so", "C": "sp", "D": "so"}[letter], size)


def algebra_dim(a: Algebra) -> int:
    n = a.n
    if a.family == "sl":
        return n * n - 1
    if a.family == "so":
        return n * (n - 1) // 2
    if a.family == "sp":
        m = n // 2
        return m * (2 * m + 1)
    return EXCEPTIONAL_DIMS[a.family]


@dataclass(frozen=True)
class Orbit:
    algebra: Algebra
    label: Union[Partition, str]
    tag: str | None = None

    def __post_init__(self):
        a = self.algebra
        if a.is_classical:
            if not isinstance(self.label, Partition):
                object.__setattr__(self, "label", make_partition(self.label))
            lam = self.label
            if lam.n != a.n:
                raise OrbitError(f"partition {format_partition(lam)} has size {lam.n}, {a} needs {a.n}")
            if not in_eps_class(lam, a.eps):
                raise OrbitError(f"partition {format_partition(lam)} does not label an orbit of {a}")
            needs_tag = a.family == "so" and a.n % 2 == 0 and is_very_even(lam)
            if needs_tag and self.tag not in ("I", "II"):
                raise OrbitError(f"very even partition {format_partition(lam)} in {a} needs tag I or II")
            if not needs_tag and self.tag is not None:
                raise OrbitError(f"tag {self.tag} given for a partition that is not very even")
        else:
            if self.tag is not None:
                raise OrbitError("exceptional orbits carry no tag")
            if self.label not in ("0", a.family):
                from . import excdata
                excdata.lookup(a.family, self.label)

    @property
    def partition(self) -> Partition:
        if not self.algebra.is_classical:
            raise OrbitError("exceptional orbits are labelled by Bala-Carter names")
        return self.label

    @property
    def is_zero(self) -> bool:
        if self.algebra.is_classical:
            return all(p == 1 for p in self.label)
        return self.label == "0"

    def __str__(self) -> str:
        a = self.algebra
        if not a.is_classical:
            return f"{a}:{self.label}"
        body = format_partition(self.label) or "()"
        return f"{a}:{body}" + (f":{self.tag}" if self.tag else "")


def parse_orbit(text: str) -> Orbit:
    """"sl6:3,3", "so8:2^4:I", "sp4:2,2", "E7:A4+A1"."""
    head, sep, rest = text.strip().partition(":")
    if not sep:
        raise OrbitError(f"cannot parse orbit {text!r}; expected <algebra>:<label>")
    a = parse_algebra(head)
    if not a.is_classical:
        return Orbit(a, rest.strip())
    tag = None
    body = rest
    if rest.count(":") == 1:
        body, tag = rest.split(":")
        tag = tag.strip().upper()
    try:
        lam = parse_partition(body)
    except ValueError as exc:
        raise OrbitError(str(exc)) from None
    return Orbit(a, lam, tag)


def classical_orbit(a: Algebra, lam, tag: str | None = None) -> Orbit:
    return Orbit(a, make_partition(lam), tag)


def _tags_for(a: Algebra, lam) -> tuple:
    if a.family == "so" and a.n % 2 == 0 and is_very_even(lam):
        return ("I", "II")
    return (None,)


def all_orbits(a: Algebra) -> list[Orbit]:
    """Every nilpotent orbit of a classical algebra, reverse-lexicographic in the partition."""
    if not a.is_classical:
        from . import excdata
        recs = excdata.list_orbits(a.family, "all")
        return [Orbit(a, "0")] + [Orbit(a, r.label) for r in recs] + [Orbit(a, a.family)]
    return [Orbit(a, lam, t) for lam in enumerate_partitions(a.n, a.eps) for t in _tags_for(a, lam)]


def partition_dim(lam, eps) -> int:
    """Orbit dimension from the partition alone."""
    eps = EpsClass.coerce(eps)
    lam = tuple(lam)
    n = sum(lam)
    sq = sum(d * d for d in dual(lam))
    odd = sum(1 for p in lam if p % 2)
    if eps is EpsClass.A:
        return n * n - sq
    if eps is EpsClass.PLUS:
        return (n * (n - 1) - (sq - odd)) // 2
    m = n // 2
    return m * (2 * m + 1) - (sq + odd) // 2


def partition_algebra_dim(n: int, eps) -> int:
    eps = EpsClass.coerce(eps)
    if eps is EpsClass.A:
        return n * n - 1
    if eps is EpsClass.PLUS:
        return n * (n - 1) // 2
    return (n // 2) * (n + 1)


def partition_is_little(lam, eps) -> bool:
    d = partition_dim(lam, eps)
    return 0 < 2 * d <= partition_algebra_dim(sum(lam), eps)


def partition_is_rigid(lam, eps) -> bool:
    eps = EpsClass.coerce(eps)
    lam = tuple(lam)
    if eps is EpsClass.A:
        return all(p == 1 for p in lam)
    padded = lam + (0,)
    if any(padded[i] - padded[i + 1] > 1 for i in range(len(lam))):
        return False
    twice = 1 if eps is EpsClass.PLUS else 0
    return not any(m == 2 for v, m in Counter(lam).items() if v % 2 == twice)


def orbit_dim(o: Orbit) -> int:
    a = o.algebra
    if a.is_classical:
        return partition_dim(o.label, a.eps)
    if o.label == "0":
        return 0
    if o.label == a.family:
        return algebra_dim(a) - a.rank
    from . import excdata
    return excdata.lookup(a.family, o.label).dim


def codim(o: Orbit) -> int:
    return algebra_dim(o.algebra) - orbit_dim(o)


def closure_leq(o1: Orbit, o2: Orbit) -> bool:
    """True iff o1 lies in the closure of o2."""
    if o1.algebra != o2.algebra:
        raise OrbitError(f"orbits live in different algebras: {o1.algebra} and {o2.algebra}")
    if not o1.algebra.is_classical:
        if o1 == o2:
            return True
        raise OrbitError("closure order is only implemented for classical algebras")
    if o1.label == o2.label:
        return o1.tag == o2.tag
    return dominates(o2.label, o1.label)


def boundary(o: Orbit) -> list[Orbit]:
    if not o.algebra.is_classical:
        raise OrbitError("boundary is only implemented for classical algebras")
    return [x for x in all_orbits(o.algebra) if x != o and closure_leq(x, o)]


def is_little(o: Orbit) -> bool:
    a = o.algebra
    if a.is_classical:
        return partition_is_little(o.label, a.eps)
    d = orbit_dim(o)
    return 0 < 2 * d <= algebra_dim(a)


def is_rigid(o: Orbit) -> bool:
    a = o.algebra
    if a.is_classical:
        return partition_is_rigid(o.label, a.eps)
    if o.label == "0":
        return True
    if o.label == a.family:
        return False
    from . import excdata
    return excdata.lookup(a.family, o.label).rigid


def _require_classical(a: Algebra):
    if not a.is_classical:
        raise OrbitError(f"{a} is not classical")


def regular_partition(a: Algebra) -> Orbit:
    _require_classical(a)
    lam = (a.n,) if a.eps is EpsClass.A else collapse((a.n,), a.eps)
    return Orbit(a, make_partition(lam), _tags_for(a, lam)[0])


def _unique_maximal(orbits: list[Orbit], what: str) -> Orbit:
    tops = [x for x in orbits if not any(y != x and closure_leq(x, y) for y in orbits)]
    if len(tops) != 1:
        raise OrbitError(f"no unique {what}: {[str(t) for t in tops]}")
    return tops[0]


def subregular_orbit(a: Algebra) -> Orbit:
    _require_classical(a)
    if a.rank < 2:
        raise OrbitError("subregular orbit needs rank at least 2")
    reg = regular_partition(a)
    return _unique_maximal(boundary(reg), "subregular orbit")


def minimal_orbit(a: Algebra) -> Orbit:
    if not a.is_classical:
        from . import excdata
        return Orbit(a, excdata.list_orbits(a.family, "all")[0].label)
    nonzero = [x for x in all_orbits(a) if not x.is_zero]
    if not nonzero:
        raise OrbitError(f"{a} has no nonzero nilpotent orbit")
    low = min(orbit_dim(x) for x in nonzero)
    cands = [x for x in nonzero if orbit_dim(x) == low]
    if len(cands) != 1:
        raise OrbitError(f"no unique minimal orbit in {a}: {[str(c) for c in cands]}")
    return cands[0]
