"""RC1 verdicts: littleness, restriction to a maximal Levi, the (2^p) special case, exceptional tables."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .partitions import EpsClass, concat, parse_partition
from .orbits import (
    Algebra,
    Orbit,
    OrbitError,
    algebra_dim,
    algebra_from_type,
    codim,
    is_little,
    orbit_dim,
)
from .rootsys import build_from_name, dynkin_components, levi_condition_i

REASONS = ("Little", "Restriction", "SpecialCase2p", "ExceptionalTable")


class RcError(ValueError):
    pass


@dataclass(frozen=True)
class Rc1Verdict:
    status: str  # Yes, No or Unknown
    reason: str | None = None
    row: int | None = None

    def __post_init__(self):
        if self.status not in ("Yes", "No", "Unknown"):
            raise RcError(f"bad status {self.status}")
        if (self.status == "Unknown") != (self.reason is None):
            raise RcError("Yes/No verdicts need a reason and Unknown carries none")

    def describe(self) -> str:
        if self.reason is None:
            return self.status
        tail = f":{self.row}" if self.row is not None else ""
        return f"{self.status}({self.reason}{tail})"


@dataclass(frozen=True)
class RestrictionDatum:
    ambient: Algebra
    levi_subset: tuple[int, ...]
    ambient_orbit: Orbit
    sub_orbit: Orbit
    source_row: int

    @property
    def ambient_type(self) -> str:
        t, r = self.ambient.root_type
        return t if not self.ambient.is_classical else f"{t}{r}"

    @property
    def ambient_orbit_label(self) -> str:
        return _label(self.ambient_orbit)

    @property
    def sub_orbit_label(self) -> str:
        return _label(self.sub_orbit)


def _label(o: Orbit) -> str:
    return str(o).split(":", 1)[1]


@dataclass(frozen=True)
class RestrictionCheck:
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii


def _orbit_in(a: Algebra, label: str) -> Orbit:
    if a.is_classical:
        return Orbit(a, parse_partition(label))
    return Orbit(a, label)


def make_datum(ambient_type: str, subset, ambient_label: str, sub_label: str, source_row: int = 0) -> RestrictionDatum:
    ambient = algebra_from_type(ambient_type)
    subset = tuple(sorted(int(s) for s in subset))
    if len(subset) != ambient.rank - 1:
        raise RcError(f"subset {subset} does not give a maximal Levi of {ambient_type}")
    comps = dynkin_components(build_from_name(ambient_type), subset)
    if len(comps) != 1:
        raise RcError(f"semisimple part of the Levi on {subset} is not simple: {[c for c, _ in comps]}")
    sub_alg = algebra_from_type(comps[0][0])
    return RestrictionDatum(ambient, subset, _orbit_in(ambient, ambient_label), _orbit_in(sub_alg, sub_label),
                            source_row)


def restriction_check(d: RestrictionDatum) -> RestrictionCheck:
    """Conditions (i)-(iii) for restricting to a maximal Levi with one-dimensional centre."""
    rs = build_from_name(d.ambient_type)
    cond_i = levi_condition_i(rs, d.levi_subset)
    cond_ii = not d.sub_orbit.is_zero
    lhs = 2 * orbit_dim(d.ambient_orbit)
    rhs = algebra_dim(d.ambient) - 1
    return RestrictionCheck(cond_i, cond_ii, lhs <= rhs, lhs, rhs)


def consistent_partitions(d: RestrictionDatum) -> bool | None:
    """For classical rows: ambient partition is the sub partition plus (1,1). None when not applicable."""
    if not d.ambient.is_classical:
        return None
    return d.ambient_orbit.partition == concat(d.sub_orbit.partition, (1, 1))


def parse_registry(text: str) -> list[RestrictionDatum]:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        subset = [int(s) for s in row["levi_subset"].split(",")]
        out.append(make_datum(row["ambient_type"], subset, row["ambient_orbit"], row["sub_orbit"],
                              int(row["source_row"])))
    return out


@lru_cache(maxsize=None)
def registry() -> tuple[RestrictionDatum, ...]:
    """The shipped restriction rows, re-verified on load."""
    text = resources.files("nilorbits").joinpath("data/restriction_registry.csv").read_text()
    rows = parse_registry(text)
    for d in rows:
        chk = restriction_check(d)
        if not chk.passed or consistent_partitions(d) is False:
            raise RcError(f"registry row {d.source_row} fails its checks: {chk}")
    return tuple(rows)


def rc1_status(o: Orbit) -> Rc1Verdict:
    a = o.algebra
    if is_little(o):
        return Rc1Verdict("Yes", "Little")
    if a.family == "sl":
        lam = o.partition
        if len(lam) >= 2 and set(lam) == {2}:
            return Rc1Verdict("Yes", "SpecialCase2p")
    for d in registry():
        if d.sub_orbit == o and restriction_check(d).passed:
            return Rc1Verdict("Yes", "Restriction", d.source_row)
    if not a.is_classical and o.label not in ("0", a.family):
        from . import excdata
        rec = excdata.lookup(a.family, o.label)
        return Rc1Verdict(rec.rc1, "ExceptionalTable")
    return Rc1Verdict("Unknown")


def zero_fiber_lower_bound(o: Orbit, m: int) -> int:
    """Lower bound for the dimension of the fibre over 0 in the m-jets of the orbit closure."""
    if o.is_zero:
        raise OrbitError("the zero orbit has no zero-fibre bound")
    if m < 1:
        raise RcError("m must be at least 1")
    if m == 1:
        return algebra_dim(o.algebra)
    return m * orbit_dim(o) + codim(o)


def zero_fiber_sufficient(o: Orbit, m: int) -> bool:
    """True iff the bound already exceeds the dimension (m+1)*dim of the main component."""
    return zero_fiber_lower_bound(o, m) >= (m + 1) * orbit_dim(o)
