"""Acceptance criteria, one printed PASS/FAIL line each.

Runs under pytest (lines are collected into the terminal summary) or directly:
``python3 tests/test_acceptance.py``.
"""

import csv
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from nilorbits import excdata
from nilorbits.induction import (
    InductionDatum,
    LeviShapeA,
    LeviShapeBCD,
    brute_force_little_set,
    brute_force_little_set_A,
    codim_preserved,
    induce_A,
    induce_BCD,
    induced_from_little_set,
    thmA_predicate,
    thmBCD_predicate,
)
from nilorbits.jets import JetPolynomial, generic_matrix, jet_expand, matrix_power_jet_ideal, parse_poly
from nilorbits.orbits import Algebra, algebra_dim, orbit_dim, subregular_orbit
from nilorbits.partitions import EpsClass, Partition, brute_collapse, collapse, enumerate_partitions, is_rectangular
from nilorbits.rc import registry, restriction_check

PLUS, MINUS = EpsClass.PLUS, EpsClass.MINUS
DATA = Path(__file__).parent / "data" / "count_tables.csv"


def _table(family):
    with open(DATA) as fh:
        return {int(r["n"]): (int(r["induced_from_little"]), int(r["total"]))
                for r in csv.DictReader(fh) if r["family"] == family}


def _cli_stats(family, max_n):
    cmd = [sys.executable, "-m", "nilorbits", "stats", "little-induced", "--family", family,
           "--max-n", str(max_n), "--format", "csv"]
    t = time.perf_counter()
    out = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    elapsed = time.perf_counter() - t
    rows = {}
    for line in out.splitlines()[1:]:
        n, count, total = map(int, line.split(","))
        rows[n] = (count, total)
    return rows, elapsed


def criterion_1():
    want = _table("so")
    small, t30 = _cli_stats("so", 30)
    rows, t51 = _cli_stats("so", 51)
    bad = [n for n in want if rows.get(n) != want[n]]
    bad += [n for n in range(2, 31) if small.get(n) != want[n]]
    ok = not bad and len(want) == 50 and set(rows) == set(want) and t30 <= 30 and t51 <= 600
    spot = f"n=12 {rows[12]}, n=30 {rows[30]}, n=51 {rows[51]}"
    miss = "".join(f"; n={n} got {rows.get(n)} table {want[n]}" for n in sorted(set(bad)))
    return ok, (f"so rows 2..51 exact ({len(want) - len(set(bad))}/50); {spot}; "
                f"n<=30 in {t30:.1f}s, n<=51 in {t51:.1f}s{miss}")


def criterion_2():
    want = _table("sp")
    rows, t = _cli_stats("sp", 24)
    bad = [n for n in want if rows.get(n) != want[n]]
    ok = not bad and len(want) == 24 and t <= 300
    miss = "".join(f"; n={n} got {rows.get(n)} table {want[n]}" for n in bad)
    return ok, f"sp rows 1..24 exact ({24 - len(bad)}/24); n=6 {rows[6]}, n=24 {rows[24]}; {t:.1f}s{miss}"


def criterion_3():
    t = time.perf_counter()
    mism = []
    checked = 0
    for convention in ("table", "all"):
        for n in range(1, 13):
            for eps in (PLUS, MINUS):
                if eps is MINUS and n % 2:
                    continue
                checked += 1
                if induced_from_little_set(n, eps, convention) != brute_force_little_set(n, eps, convention):
                    mism.append((convention, eps.name, n))
    el = time.perf_counter() - t
    return not mism and el <= 120, f"{checked} (n, family, convention) cases, mismatches {mism}; {el:.1f}s"


def criterion_4():
    t = time.perf_counter()
    count, bad = 0, []
    for n in range(0, 17):
        for lam in enumerate_partitions(n):
            for eps in (PLUS, MINUS):
                if eps is MINUS and n % 2:
                    continue
                count += 1
                if collapse(lam, eps) != brute_collapse(lam, eps):
                    bad.append((lam, eps.name))
    el = time.perf_counter() - t
    return not bad and el <= 60, f"{count} (partition, eps) pairs n<=16, mismatches {len(bad)}; {el:.1f}s"


def _random_bcd(rng, eps):
    while True:
        n = rng.randint(1, 16)
        if eps is MINUS and n % 2:
            continue
        half = rng.randint(0, n // 2)
        r = n - 2 * half
        if eps is MINUS and r % 2:
            continue
        blocks = []
        while sum(blocks) < half:
            blocks.append(rng.randint(1, half - sum(blocks)))
        gl = tuple(rng.choice(enumerate_partitions(p)) for p in blocks)
        base = rng.choice(enumerate_partitions(r, eps))
        return n, InductionDatum(LeviShapeBCD(tuple(blocks), r), gl, base)


def _random_a(rng):
    n = rng.randint(1, 16)
    comp = []
    while sum(comp) < n:
        comp.append(rng.randint(1, n - sum(comp)))
    orbits = tuple(rng.choice(enumerate_partitions(m)) for m in comp)
    return n, InductionDatum(LeviShapeA(tuple(comp)), orbits)


def criterion_5():
    rng = random.Random(20240501)
    fails = {}
    for eps in (PLUS, MINUS, EpsClass.A):
        bad = 0
        for _ in range(500):
            if eps is EpsClass.A:
                n, d = _random_a(rng)
                lam = induce_A(d.levi, d.gl_orbits)
            else:
                n, d = _random_bcd(rng, eps)
                lam = induce_BCD(n, eps, d)
            bad += not codim_preserved(n, eps, d, lam)
        fails[eps.name] = bad
    return not any(fails.values()), f"500 random data per family (n<=16), failures {fails}"


def criterion_6():
    bad = []
    for n in range(3, 15):
        got = brute_force_little_set_A(n)
        want = {Partition(l) for l in enumerate_partitions(n) if thmA_predicate(l)}
        if got != want or any(is_rectangular(l) for l in got):
            bad.append(n)
    return not bad, f"type A n=3..14: induced-from-little == non-rectangular; failing n {bad}"


def criterion_7():
    bad = []
    checked = 0
    for n in range(1, 19):
        for eps in (PLUS, MINUS):
            if eps is MINUS and n % 2:
                continue
            s = induced_from_little_set(n, eps, "all")
            for lam in enumerate_partitions(n, eps):
                if thmBCD_predicate(lam):
                    checked += 1
                    if lam not in s:
                        bad.append((eps.name, lam))
    lam = Partition((4, 4, 3))
    remark = lam in induced_from_little_set(11, PLUS, "all") and not thmBCD_predicate(lam)
    return not bad and remark, (f"{checked} two-jump partitions n<=18 all in S (base rank r>=0 allowed), "
                                f"misses {bad}; (4,4,3) in S_1(11) without two jumps: {remark}")


def _generic(n, level):
    X = generic_matrix(n)
    return [[JetPolynomial({tuple(((k[0], level), e) for k, e in m): c for m, c in x.terms.items()})
             for x in row] for row in X]


def _mm(A, B):
    n = len(A)
    out = [[JetPolynomial() for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            for k in range(n):
                out[a][b] = out[a][b] + A[a][k] * B[k][b]
    return out


def criterion_8():
    f = parse_poly("x^2+y*z")
    g1 = [p.to_text() for p in jet_expand(f, 1)]
    g2 = [p.to_text() for p in jet_expand(f, 2)]
    ok1 = g1 == ["x_0^2 + y_0*z_0", "2*x_0*x_1 + y_0*z_1 + y_1*z_0"]
    ok2 = g2 == g1 + ["2*x_0*x_2 + x_1^2 + y_0*z_2 + y_1*z_1 + y_2*z_0"]
    X0, X1 = _generic(4, 0), _generic(4, 1)
    sq = _mm(X0, X0)
    a, b = _mm(X0, X1), _mm(X1, X0)
    want = [sq[i][j] for i in range(4) for j in range(4)] + \
           [a[i][j] + b[i][j] for i in range(4) for j in range(4)]
    got = matrix_power_jet_ideal(4, 2, 1)
    ok3 = got == want
    return ok1 and ok2 and ok3, (f"x^2+yz order 1: {ok1}, order 2: {ok2}; "
                                 f"matrix(4,2,1) == entries of X0^2 and X0X1+X1X0: {ok3} ({len(got)} generators)")


def criterion_9():
    rows = registry()
    checks = [(d, restriction_check(d)) for d in rows]
    all_pass = len(rows) == 9 and all(c.cond_i and c.cond_ii and c.cond_iii for _, c in checks)
    a2 = [c for d, c in checks if d.ambient_type == "E7" and d.ambient_orbit_label == "A2"]
    eq = len(a2) == 1 and a2[0].lhs == a2[0].rhs == 132
    return all_pass and eq, f"{len(rows)} rows pass (i)-(iii): {all_pass}; E7/E6 A2 row 2*dim = {a2[0].lhs} <= {a2[0].rhs}"


def criterion_10():
    rep = excdata.validate_tables()
    mins = {"G2": 6, "F4": 16, "E6": 22, "E7": 34, "E8": 58}
    min_ok = all(excdata.list_orbits(t)[0].dim == d and excdata.list_orbits(t)[0].little for t, d in mins.items())
    witnesses = [r for r in excdata.records() if r.rc2 == "Yes" and r.rc2_witness != "little"]
    parsed = 0
    for r in witnesses:
        try:
            excdata.parse_witness(r.rc2_witness)
            parsed += 1
        except excdata.DataError:
            pass
    replayed = rep.witnesses_replayed - len(rep.anomalies)
    ok = rep.ok and min_ok and parsed == len(witnesses) and replayed == len(witnesses)
    detail = (f"violations {len(rep.violations)}; minimal dims 6/16/22/34/58 little: {min_ok}; "
              f"witnesses parsed {parsed}/{len(witnesses)}, replayed {replayed}/{len(witnesses)}")
    if rep.anomalies:
        detail += "; not replayable as printed: " + " | ".join(rep.anomalies)
    return ok, detail


def criterion_11():
    bad = []
    count = 0
    for rank in range(2, 13):
        algs = [Algebra("sl", rank + 1), Algebra("so", 2 * rank + 1), Algebra("sp", 2 * rank)]
        if rank >= 3:
            algs.append(Algebra("so", 2 * rank))
        for a in algs:
            count += 1
            if orbit_dim(subregular_orbit(a)) != algebra_dim(a) - a.rank - 2:
                bad.append(str(a))
    return not bad, f"{count} algebras (A, B, C rank 2..12; D rank 3..12): dim subregular = dim g - rank - 2, failing {bad}"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 12)}


def _line(i, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {i}: {detail}"


@pytest.mark.parametrize("i", sorted(CRITERIA))
def test_criterion(i, acceptance_log):
    ok, detail = CRITERIA[i]()
    line = _line(i, ok, detail)
    acceptance_log.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for i, fn in CRITERIA.items():
        ok, detail = fn()
        failed += not ok
        print(_line(i, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
