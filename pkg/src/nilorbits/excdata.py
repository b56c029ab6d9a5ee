"""Nilpotent orbits of the exceptional algebras as curated data, with consistency checks.

The table ships as ``data/exceptional_orbits.csv``.  Set ``NILORBITS_EXCEPTIONAL_DATA``
to load a different file (the checksum is only enforced for the shipped copy).
"""

from __future__ import annotations

import csv
import difflib
import hashlib
import io
import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .partitions import EpsClass, Partition, format_compact, in_eps_class, parse_partition
from .orbits import EXCEPTIONAL_DIMS, EXCEPTIONAL_RANKS, algebra_from_type

ENV_VAR = "NILORBITS_EXCEPTIONAL_DATA"
DATA_SHA256 = "21601f25b0773e44847f15a1f0e801fae196a58d58215cd998752c9544747b4a"
COLUMNS = ["type", "label", "characteristic", "dim", "rc1", "rc1_reason", "rc2", "rc2_witness",
           "rigid", "little", "notes"]
EXPECTED_COUNTS = {"G2": 3, "F4": 14, "E6": 19, "E7": 43, "E8": 68}
MINIMAL_DIMS = {"G2": 6, "F4": 16, "E6": 22, "E7": 34, "E8": 58}


class DataError(ValueError):
    pass


@dataclass(frozen=True)
class ExceptionalOrbitRecord:
    type: str
    label: str
    characteristic: tuple[int, ...]
    dim: int
    rc1: str
    rc1_reason: str
    rc2: str
    rc2_witness: str
    rigid: bool
    little: bool
    notes: str = ""

    @property
    def anomaly(self) -> str | None:
        return self.notes[len("anomaly:"):].strip() if self.notes.startswith("anomaly:") else None

    @property
    def witness_partition(self) -> Partition | None:
        m = re.match(r"witness_partition:\s*(.+)$", self.notes)
        return parse_partition(m.group(1)) if m else None


def _bool(text: str) -> bool:
    if text not in ("true", "false"):
        raise DataError(f"expected true/false, got {text!r}")
    return text == "true"


def parse_characteristic(text: str) -> tuple[int, ...]:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise DataError(f"bad characteristic {text!r}")
    return tuple(int(x) for x in body[1:-1].split(","))


def _data_bytes() -> tuple[bytes, bool]:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override).read_bytes(), False
    return resources.files("nilorbits").joinpath("data/exceptional_orbits.csv").read_bytes(), True


def parse_records(raw: bytes) -> list[ExceptionalOrbitRecord]:
    reader = csv.DictReader(io.StringIO(raw.decode("utf-8")))
    if reader.fieldnames != COLUMNS:
        raise DataError(f"unexpected columns {reader.fieldnames}")
    out = []
    for row in reader:
        out.append(ExceptionalOrbitRecord(
            type=row["type"], label=row["label"],
            characteristic=parse_characteristic(row["characteristic"]), dim=int(row["dim"]),
            rc1=row["rc1"], rc1_reason=row["rc1_reason"], rc2=row["rc2"], rc2_witness=row["rc2_witness"],
            rigid=_bool(row["rigid"]), little=_bool(row["little"]), notes=row["notes"]))
    return out


@lru_cache(maxsize=None)
def _load(source_key: str | None) -> tuple[ExceptionalOrbitRecord, ...]:
    raw, shipped = _data_bytes()
    if shipped and hashlib.sha256(raw).hexdigest() != DATA_SHA256:
        raise DataError("shipped exceptional data does not match its checksum")
    return tuple(parse_records(raw))


def records() -> tuple[ExceptionalOrbitRecord, ...]:
    return _load(os.environ.get(ENV_VAR))


def _norm(label: str) -> str:
    return label.replace(" ", "").replace("′", "'")


def lookup(type_name: str, label: str) -> ExceptionalOrbitRecord:
    t = type_name.upper()
    if t not in EXCEPTIONAL_DIMS:
        raise DataError(f"unknown exceptional type {type_name!r}")
    rows = [r for r in records() if r.type == t]
    for r in rows:
        if r.label == _norm(label):
            return r
    for r in rows:
        if r.label.lower() == _norm(label).lower():
            return r
    near = difflib.get_close_matches(_norm(label), [r.label for r in rows], n=4)
    hint = f"; near matches: {', '.join(near)}" if near else ""
    raise DataError(f"no orbit {label!r} in {t}{hint}")


def lookup_characteristic(type_name: str, characteristic) -> ExceptionalOrbitRecord | None:
    ch = tuple(characteristic)
    for r in records():
        if r.type == type_name and r.characteristic == ch:
            return r
    return None


FILTERS = ("all", "little", "rigid", "rc2_unknown", "rc2")


def list_orbits(type_name: str, filter: str = "all") -> list[ExceptionalOrbitRecord]:
    t = type_name.upper()
    if filter not in FILTERS:
        raise DataError(f"unknown filter {filter!r}; choose from {FILTERS}")
    rows = [r for r in records() if r.type == t]
    if not rows:
        raise DataError(f"unknown exceptional type {type_name!r}")
    keep = {
        "all": lambda r: True,
        "little": lambda r: r.little,
        "rigid": lambda r: r.rigid,
        "rc2_unknown": lambda r: r.rc2 == "Unknown",
        "rc2": lambda r: r.rc2 == "Yes",
    }[filter]
    return [r for r in rows if keep(r)]


# ---------------------------------------------------------------- witnesses

@dataclass(frozen=True)
class WitnessFactor:
    kind: str  # "min", "partition" or "characteristic"
    partition: Partition | None = None
    characteristic: tuple[int, ...] | None = None

    def __str__(self) -> str:
        if self.kind == "min":
            return "min"
        if self.kind == "partition":
            return f"({format_compact(self.partition)})"
        return "[" + ",".join(map(str, self.characteristic)) + "]"


@dataclass(frozen=True)
class Witness:
    factors: tuple[WitnessFactor, ...]
    nodes: tuple[int, ...]

    def __str__(self) -> str:
        return ",".join(map(str, self.factors)) + "@{" + ",".join(map(str, self.nodes)) + "}"


_FACTOR = re.compile(r"\s*(?:\(([^()]*)\)|\[([^\]]*)\]|(min))\s*(?:,|$)")


def parse_witness(text: str) -> Witness:
    """"(2,1),(1^2)@{1,2,4}", "[0,1,0]@{2,3,4}" or "min@{2,3,4}"."""
    body, sep, nodes = text.partition("@")
    if not sep or not (nodes.startswith("{") and nodes.endswith("}")):
        raise DataError(f"bad witness {text!r}")
    node_list = tuple(int(x) for x in nodes[1:-1].split(","))
    factors, pos = [], 0
    while pos < len(body):
        m = _FACTOR.match(body, pos)
        if not m or m.end() == pos:
            raise DataError(f"bad witness factor list {body!r}")
        if m.group(1) is not None:
            factors.append(WitnessFactor("partition", partition=parse_partition(m.group(1))))
        elif m.group(2) is not None:
            factors.append(WitnessFactor("characteristic", characteristic=tuple(int(x) for x in m.group(2).split(","))))
        else:
            factors.append(WitnessFactor("min"))
        pos = m.end()
    if not factors:
        raise DataError(f"witness {text!r} has no factors")
    return Witness(tuple(factors), node_list)


def _factor_certified(factor: WitnessFactor, comp_type: str, rec: ExceptionalOrbitRecord) -> tuple[str | None, bool]:
    """Check one witness factor against its Levi component.

    Returns (problem, certified): a structural problem (wrong size, class or
    shape) or None, and whether the factor is little or induced from little.
    """
    from .induction import little_induced_certificate, type_a_certificate
    from .orbits import is_little, minimal_orbit

    rank = int(comp_type[1:])
    if factor.kind == "min":
        if comp_type == "A1":
            return "the minimal orbit of A1 is not little", False
        return None, is_little(minimal_orbit(algebra_from_type(comp_type)))
    if factor.kind == "characteristic":
        ch = factor.characteristic
        if len(ch) != rank or any(c not in (0, 1, 2) for c in ch):
            return f"characteristic {list(ch)} does not fit {comp_type}", False
        if comp_type in EXCEPTIONAL_DIMS:
            sub = lookup_characteristic(comp_type, ch)
            if sub is None:
                return f"no {comp_type} orbit has characteristic {list(ch)}", False
            return None, sub.little or sub.rc2 == "Yes"
        lam = rec.witness_partition
        if lam is None:
            # classical characteristic without a recorded partition: shape check only
            return None, True
        factor = WitnessFactor("partition", partition=lam)
    lam = factor.partition
    a = algebra_from_type(comp_type)
    if lam.n != a.n:
        return f"partition ({format_compact(lam)}) has size {lam.n}, {comp_type} needs {a.n}", False
    if not in_eps_class(lam, a.eps):
        return f"partition ({format_compact(lam)}) does not label an orbit of {comp_type}", False
    if a.eps is EpsClass.A:
        return None, type_a_certificate(lam) is not None
    return None, little_induced_certificate(lam, a.eps, "all") is not None


def replay_witness(rec: ExceptionalOrbitRecord) -> list[str]:
    """Structural replay of an RC2 witness; returns a list of problems (empty when it replays)."""
    from .rootsys import build, dynkin_components

    try:
        w = parse_witness(rec.rc2_witness)
    except (DataError, ValueError) as exc:
        return [f"unparsable witness: {exc}"]
    rank = EXCEPTIONAL_RANKS[rec.type]
    problems = []
    if len(set(w.nodes)) != len(w.nodes) or not all(1 <= v <= rank for v in w.nodes):
        return [f"node subset {set(w.nodes)} is not a subset of 1..{rank}"]
    if len(w.nodes) != rank - 1:
        problems.append(f"node subset {set(w.nodes)} is not a maximal Levi")
    comps = dynkin_components(build(rec.type), w.nodes)
    if len(comps) != len(w.factors):
        return problems + [f"{len(w.factors)} factors for components {[c for c, _ in comps]}"]
    certified = []
    for factor, (ctype, _) in zip(w.factors, comps):
        problem, ok = _factor_certified(factor, ctype, rec)
        if problem:
            problems.append(problem)
        certified.append(ok)
    if not problems and not any(certified):
        problems.append("no factor is little or induced from little")
    return problems


# ---------------------------------------------------------------- validation

@dataclass
class ValidationReport:
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    anomalies: list[str] = field(default_factory=list)
    witnesses_replayed: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        out = [f"records checked: {self.checked}", f"witnesses replayed: {self.witnesses_replayed}",
               f"violations: {len(self.violations)}", f"documented anomalies: {len(self.anomalies)}"]
        out += [f"  violation: {v}" for v in self.violations]
        out += [f"  anomaly: {a}" for a in self.anomalies]
        return out


def validate_tables(recs=None) -> ValidationReport:
    recs = list(records() if recs is None else recs)
    rep = ValidationReport(checked=len(recs))
    by_type: dict[str, list[ExceptionalOrbitRecord]] = {}
    for r in recs:
        by_type.setdefault(r.type, []).append(r)

    for t, expected in EXPECTED_COUNTS.items():
        got = len(by_type.get(t, []))
        if got != expected:
            rep.violations.append(f"{t}: {got} records, expected {expected}")
    for t, rows in by_type.items():
        if t not in EXCEPTIONAL_DIMS:
            rep.violations.append(f"unknown type {t}")
            continue
        labels = [r.label for r in rows]
        if len(set(labels)) != len(labels):
            rep.violations.append(f"{t}: duplicate labels")
        chars = [r.characteristic for r in rows]
        if len(set(chars)) != len(chars):
            rep.violations.append(f"{t}: duplicate characteristics")
        if any(b.dim < a.dim for a, b in zip(rows, rows[1:])):
            rep.violations.append(f"{t}: dimensions are not sorted")
        if rows and rows[0].dim != MINIMAL_DIMS[t]:
            rep.violations.append(f"{t}: first row has dim {rows[0].dim}, minimal orbit has {MINIMAL_DIMS[t]}")
        if rows and not rows[0].little:
            rep.violations.append(f"{t}: minimal orbit is not flagged little")

    for r in recs:
        where = f"{r.type} {r.label}"
        if r.type not in EXCEPTIONAL_DIMS:
            continue
        gdim = EXCEPTIONAL_DIMS[r.type]
        if len(r.characteristic) != EXCEPTIONAL_RANKS[r.type] or any(c not in (0, 1, 2) for c in r.characteristic):
            rep.violations.append(f"{where}: bad characteristic {list(r.characteristic)}")
        if r.dim % 2 or not 0 < r.dim < gdim - EXCEPTIONAL_RANKS[r.type]:
            rep.violations.append(f"{where}: impossible dimension {r.dim}")
        if r.little != (0 < 2 * r.dim <= gdim):
            rep.violations.append(f"{where}: little flag disagrees with 2*{r.dim} <= {gdim}")
        if (r.rc1 == "Yes" and r.rc1_reason == "little") != r.little:
            rep.violations.append(f"{where}: rc1 reason 'little' disagrees with the little flag")
        if r.rc1 not in ("Yes", "No") or (r.rc1 == "Yes") != bool(r.rc1_reason):
            rep.violations.append(f"{where}: bad rc1 entry {r.rc1}/{r.rc1_reason}")
        if r.rc2 not in ("Yes", "Unknown"):
            rep.violations.append(f"{where}: rc2 must be Yes or Unknown, got {r.rc2}")
        if r.little and not (r.rc2 == "Yes" and r.rc2_witness == "little"):
            rep.violations.append(f"{where}: little orbit without rc2 Yes(little)")
        if r.rc2_witness == "little" and not r.little:
            rep.violations.append(f"{where}: rc2 witness 'little' on a non-little orbit")
        if r.rc1_reason.startswith("restriction:"):
            _check_restriction_reason(r, rep)
        if r.rc2 == "Yes" and r.rc2_witness != "little":
            problems = replay_witness(r)
            rep.witnesses_replayed += 1
            if problems:
                msg = f"{where}: " + "; ".join(problems)
                (rep.anomalies if r.anomaly else rep.violations).append(msg)
            elif r.anomaly:
                rep.violations.append(f"{where}: marked as an anomaly but the witness replays")
        if r.rc2 == "Unknown" and r.rc2_witness:
            rep.violations.append(f"{where}: witness given for an Unknown rc2 entry")
    return rep


def _check_restriction_reason(r: ExceptionalOrbitRecord, rep: ValidationReport):
    from .rc import registry
    _, big_type, big_label = r.rc1_reason.split(":", 2)
    try:
        big = lookup(big_type, big_label)
    except DataError as exc:
        rep.violations.append(f"{r.type} {r.label}: {exc}")
        return
    if not big.little:
        rep.violations.append(f"{r.type} {r.label}: restricted from non-little {big_type} {big_label}")
    rows = [d for d in registry() if d.ambient_type == big_type and d.sub_orbit_label == r.label
            and d.ambient_orbit_label == big_label]
    if not rows:
        rep.violations.append(f"{r.type} {r.label}: no restriction registry row from {big_type} {big_label}")
