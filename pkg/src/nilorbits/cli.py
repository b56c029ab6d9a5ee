"""Command-line front end.  Data goes to stdout, diagnostics to stderr.

Exit status: 0 on success, 1 on a domain error (bad orbit, unknown label, ...),
2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict

from . import excdata, induction, jets, rc
from .orbits import (
    Orbit,
    all_orbits,
    codim,
    is_little,
    is_rigid,
    orbit_dim,
    parse_algebra,
    parse_orbit,
)
from .partitions import EpsClass, enumerate_partitions, format_partition, parse_partition
from .rootsys import build, levi_condition_i, parse_type

FORMATS = ("text", "json", "csv")


def _emit_rows(header: list[str], rows: list[list], fmt: str, out) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    elif fmt == "json":
        out.write(json.dumps([dict(zip(header, r)) for r in rows], sort_keys=True) + "\n")
    else:
        for r in rows:
            out.write("  ".join(str(x) for x in r) + "\n")


def _emit_record(d: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(d, sort_keys=True) + "\n")
    elif fmt == "csv":
        keys = list(d)
        _emit_rows(keys, [[d[k] if not isinstance(d[k], (dict, list)) else json.dumps(d[k], sort_keys=True)
                           for k in keys]], "csv", out)
    else:
        for k, v in d.items():
            if isinstance(v, (dict, list)):
                v = json.dumps(v, sort_keys=True)
            out.write(f"{k}: {v}\n")


def _orbit_summary(o: Orbit) -> dict:
    v1 = rc.rc1_status(o)
    v2 = induction.rc2_status(o)
    d = {
        "orbit": str(o),
        "dim": orbit_dim(o),
        "codim": codim(o),
        "little": is_little(o),
        "rigid": is_rigid(o),
        "rc1": v1.describe(),
        "rc2": v2.describe(),
    }
    if v2.certificate is not None:
        d["certificate"] = v2.certificate.to_dict()
    elif v2.witness is not None:
        d["certificate"] = v2.witness
    return d


def cmd_orbit_info(args, out) -> int:
    _emit_record(_orbit_summary(parse_orbit(args.orbit)), args.format, out)
    return 0


def cmd_orbit_list(args, out) -> int:
    a = parse_algebra(args.algebra)
    rows = []
    for o in all_orbits(a):
        little = is_little(o)
        rigid = is_rigid(o)
        if args.little and not little or args.rigid and not rigid:
            continue
        rc2 = induction.rc2_status(o)
        if args.rc2 and not rc2.proven:
            continue
        label = str(o).split(":", 1)[1]
        rows.append([label, orbit_dim(o), little, rigid, "Yes" if rc2.proven else "Unknown"])
    _emit_rows(["orbit", "dim", "little", "rigid", "rc2"], rows, args.format, out)
    return 0


def _parse_levi(text: str, family: str):
    if family == "sl":
        return induction.LeviShapeA(tuple(int(x) for x in text.split(",")))
    blocks, sep, r = text.partition(":")
    if not sep:
        raise induction.InductionError(f"Levi {text!r} needs the form <blocks>:<r>, e.g. 2,1:3")
    return induction.LeviShapeBCD(tuple(int(x) for x in blocks.split(",") if x), int(r))


def cmd_induce(args, out) -> int:
    a = parse_algebra(args.algebra)
    if not a.is_classical:
        raise induction.InductionError("induction is implemented for classical algebras only")
    levi = _parse_levi(args.levi, a.family)
    orbits = [parse_partition(s) for s in args.orbits.split(";")]
    if levi.n != a.n:
        raise induction.InductionError(f"Levi has size {levi.n}, {a} needs {a.n}")
    if a.eps is EpsClass.A:
        datum = induction.InductionDatum(levi, tuple(orbits))
        datum.validate()
        lam = induction.induce_A(levi, datum.gl_orbits)
    else:
        k = len(levi.gl_blocks)
        if len(orbits) != k + 1:
            raise induction.InductionError(f"expected {k} gl orbits and one base orbit, got {len(orbits)}")
        datum = induction.InductionDatum(levi, tuple(orbits[:k]), orbits[k])
        datum.validate(a.eps)
        lam = induction.induce_BCD(a.n, a.eps, datum)
    d = {
        "algebra": str(a),
        "induced": format_partition(lam),
        "codim": induction.levi_codim(datum, a.eps),
        "codim_preserved": induction.codim_preserved(a.n, a.eps, datum, lam),
    }
    _emit_record(d, args.format, out)
    return 0


def little_induced_rows(family: str, max_n: int, min_n: int | None = None, convention: str = "table"):
    """Rows (n, count, total) of the induced-from-little statistics; n is the rank for sp."""
    eps = EpsClass.coerce(family)
    lo = min_n if min_n is not None else (2 if eps is EpsClass.PLUS else 1)
    for n in range(lo, max_n + 1):
        size = n if eps is EpsClass.PLUS else 2 * n
        count = len(induction.induced_from_little_set(size, eps, convention))
        yield n, count, len(enumerate_partitions(size, eps))


def cmd_stats(args, out) -> int:
    if args.max_n < 1:
        raise ValueError("--max-n must be positive")
    rows = [list(r) for r in little_induced_rows(args.family, args.max_n, args.min_n, args.convention)]
    _emit_rows(["n", "count", "total"], rows, args.format, out)
    return 0


def _emit_polys(polys, m, fmt, out):
    if fmt == "json":
        out.write(jets.ideal_to_json(polys, m) + "\n")
    elif fmt == "csv":
        _emit_rows(["index", "polynomial"], [[i, p.to_text()] for i, p in enumerate(polys)], "csv", out)
    else:
        for p in polys:
            out.write(p.to_text() + "\n")


def cmd_jet_expand(args, out) -> int:
    f = jets.parse_poly(args.poly)
    _emit_polys(jets.jet_expand(f, args.order), args.order, args.format, out)
    return 0


def cmd_jet_matrix(args, out) -> int:
    gens = jets.matrix_power_jet_ideal(args.n, args.power, args.order, traceless=not args.no_traceless)
    _emit_polys(gens, args.order, args.format, out)
    return 0


def _record_dict(r: excdata.ExceptionalOrbitRecord) -> dict:
    d = asdict(r)
    d["characteristic"] = list(r.characteristic)
    return d


def cmd_exc_lookup(args, out) -> int:
    _emit_record(_record_dict(excdata.lookup(args.type, args.label)), args.format, out)
    return 0


def cmd_exc_list(args, out) -> int:
    recs = excdata.list_orbits(args.type, args.filter)
    rows = [[r.label, r.dim, r.little, r.rigid, r.rc1, r.rc2] for r in recs]
    _emit_rows(["label", "dim", "little", "rigid", "rc1", "rc2"], rows, args.format, out)
    return 0


def cmd_exc_validate(args, out) -> int:
    rep = excdata.validate_tables()
    if args.format == "json":
        out.write(json.dumps(asdict(rep), sort_keys=True) + "\n")
    else:
        out.write("\n".join(rep.lines()) + "\n")
    return 0 if rep.ok else 1


def cmd_levi_check(args, out) -> int:
    text = args.type.strip().upper()
    t, rank = (text, None) if text in ("A", "B", "C", "D") else parse_type(text)
    if rank is None:
        if args.rank is None:
            raise ValueError(f"type {t} needs --rank")
        rank = args.rank
    elif args.rank not in (None, rank):
        raise ValueError(f"{t} has rank {rank}")
    subset = [int(x) for x in args.subset.split(",") if x]
    ok = levi_condition_i(build(t, rank), subset)
    _emit_record({"type": f"{t}{rank}" if len(t) == 1 else t, "subset": subset, "condition_i": ok},
                 args.format, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nilorbits", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default="text")
    sub = p.add_subparsers(dest="command", required=True)

    orbit = sub.add_parser("orbit").add_subparsers(dest="action", required=True)
    info = orbit.add_parser("info", parents=[fmt], help="dimension, littleness, rigidity, RC verdicts")
    info.add_argument("orbit", help="e.g. sp4:2,2  so8:2^4:I  E7:A4+A1")
    info.set_defaults(func=cmd_orbit_info)
    lst = orbit.add_parser("list", parents=[fmt])
    lst.add_argument("--algebra", required=True)
    lst.add_argument("--little", action="store_true")
    lst.add_argument("--rigid", action="store_true")
    lst.add_argument("--rc2", action="store_true", help="only orbits with a proven RC2 certificate")
    lst.set_defaults(func=cmd_orbit_list)

    ind = sub.add_parser("induce", parents=[fmt], help="induce an orbit from a Levi subalgebra")
    ind.add_argument("--algebra", required=True)
    ind.add_argument("--levi", required=True, help="composition for sl (3,2,1); blocks:r otherwise (2,1:3)")
    ind.add_argument("--orbits", required=True, help="partitions separated by ';', base orbit last")
    ind.set_defaults(func=cmd_induce)

    stats = sub.add_parser("stats").add_subparsers(dest="action", required=True)
    li = stats.add_parser("little-induced", parents=[fmt], help="count orbits induced from little ones")
    li.add_argument("--family", choices=("so", "sp"), required=True)
    li.add_argument("--max-n", type=int, required=True)
    li.add_argument("--min-n", type=int)
    li.add_argument("--convention", choices=tuple(induction.R_MIN), default="table")
    li.set_defaults(func=cmd_stats)

    jet = sub.add_parser("jet").add_subparsers(dest="action", required=True)
    je = jet.add_parser("expand", parents=[fmt])
    je.add_argument("--poly", required=True)
    je.add_argument("--order", type=int, required=True)
    je.set_defaults(func=cmd_jet_expand)
    jm = jet.add_parser("matrix", parents=[fmt])
    jm.add_argument("--n", type=int, required=True)
    jm.add_argument("--power", type=int, required=True)
    jm.add_argument("--order", type=int, required=True)
    jm.add_argument("--no-traceless", action="store_true")
    jm.set_defaults(func=cmd_jet_matrix)

    exc = sub.add_parser("exceptional").add_subparsers(dest="action", required=True)
    el = exc.add_parser("lookup", parents=[fmt])
    el.add_argument("--type", required=True)
    el.add_argument("--label", required=True)
    el.set_defaults(func=cmd_exc_lookup)
    els = exc.add_parser("list", parents=[fmt])
    els.add_argument("--type", required=True)
    els.add_argument("--filter", choices=excdata.FILTERS, default="all")
    els.set_defaults(func=cmd_exc_list)
    ev = exc.add_parser("validate", parents=[fmt])
    ev.set_defaults(func=cmd_exc_validate)

    levi = sub.add_parser("levi").add_subparsers(dest="action", required=True)
    lc = levi.add_parser("check-i", parents=[fmt], help="every root pairs with some coroot of the subset")
    lc.add_argument("--type", required=True)
    lc.add_argument("--rank", type=int)
    lc.add_argument("--subset", required=True)
    lc.set_defaults(func=cmd_levi_check)
    return p


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ValueError, ArithmeticError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run(argv) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout."""
    buf = io.StringIO()
    code = main(list(argv), buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
