"""Jet equations: truncated expansion of polynomials and the jet ideals of matrix-power equations.

Variables are keys ``(i, j)``: base variable ``i`` at jet level ``j``.  A jet of
order m substitutes ``x_i -> sum_j x_i^(j) t^j`` and keeps powers of t up to m.
Everything is exact integer arithmetic.

For the generic n x n matrix, entry (a, b) (0-based) is base variable
``a*n + b``.  With ``traceless=True`` the last diagonal entry is eliminated as
minus the sum of the other diagonal entries, so that index is never used.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Key = tuple[int, int]
Monomial = tuple[tuple[Key, int], ...]


class JetError(ValueError):
    pass


def _mono(factors: Iterable[tuple[Key, int]]) -> Monomial:
    acc: dict[Key, int] = defaultdict(int)
    for k, e in factors:
        acc[k] += e
    return tuple(sorted((k, e) for k, e in acc.items() if e))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return _mono(a + b)


def _expanded(mono: Monomial) -> list[Key]:
    return [k for k, e in mono for _ in range(e)]


@dataclass(frozen=True)
class JetPolynomial:
    """Sparse polynomial with integer coefficients in jet variables."""

    terms: Mapping[Monomial, int] = field(default_factory=dict)
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        clean = {m: c for m, c in self.terms.items() if c}
        object.__setattr__(self, "terms", clean)

    # construction
    @classmethod
    def var(cls, i: int, j: int = 0, names=None) -> "JetPolynomial":
        return cls({(((i, j), 1),): 1}, names)

    @classmethod
    def const(cls, c: int, names=None) -> "JetPolynomial":
        return cls({(): c} if c else {}, names)

    def _names(self, other: "JetPolynomial") -> tuple[str, ...] | None:
        return self.names or other.names

    def __add__(self, other: "JetPolynomial") -> "JetPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return JetPolynomial(out, self._names(other))

    def __neg__(self) -> "JetPolynomial":
        return JetPolynomial({m: -c for m, c in self.terms.items()}, self.names)

    def __sub__(self, other: "JetPolynomial") -> "JetPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "JetPolynomial":
        if isinstance(other, int):
            return JetPolynomial({m: c * other for m, c in self.terms.items()}, self.names)
        out: dict[Monomial, int] = defaultdict(int)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[_mono_mul(m1, m2)] += c1 * c2
        return JetPolynomial(dict(out), self._names(other))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, JetPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[Key]:
        return {k for m in self.terms for k, _ in m}

    def degrees(self) -> set[int]:
        return {sum(e for _, e in m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def weights(self) -> set[int]:
        """Jet weights of the terms (level j counts j)."""
        return {sum(k[1] * e for k, e in m) for m in self.terms}

    def ordered_terms(self) -> list[tuple[Monomial, int]]:
        """Graded lexicographic order: higher degree first, then lexicographic on the sorted variable keys."""
        return sorted(self.terms.items(), key=lambda t: (-sum(e for _, e in t[0]), _expanded(t[0])))

    # output
    def var_name(self, key: Key) -> str:
        i, j = key
        if self.names is not None and i < len(self.names):
            return f"{self.names[i]}_{j}"
        return f"x{i}_{j}"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for mono, c in self.ordered_terms():
            body = "*".join(self.var_name(k) + (f"^{e}" if e > 1 else "") for k, e in mono)
            mag = abs(c)
            text = body if (mag == 1 and body) else (f"{mag}*{body}" if body else str(mag))
            if not out:
                out.append(("-" if c < 0 else "") + text)
            else:
                out.append((" - " if c < 0 else " + ") + text)
        return "".join(out)

    def __str__(self) -> str:
        return self.to_text()

    def to_json_terms(self) -> list[dict]:
        return [{"coeff": c, "monomial": [[i, j, e] for (i, j), e in mono]} for mono, c in self.ordered_terms()]

    @classmethod
    def from_json_terms(cls, terms: list[dict], names=None) -> "JetPolynomial":
        return cls({_mono(((i, j), e) for i, j, e in t["monomial"]): t["coeff"] for t in terms},
                   tuple(names) if names else None)


def parse_poly(text: str) -> JetPolynomial:
    """Parse a polynomial such as "x^2+y*z" into level-0 variables named in sorted order."""
    import sympy
    from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

    try:
        expr = parse_expr(text, transformations=standard_transformations + (convert_xor,), evaluate=True)
    except Exception as exc:  # sympy raises a zoo of exception types here
        raise JetError(f"cannot parse polynomial {text!r}: {exc}") from None
    gens = sorted(expr.free_symbols, key=lambda s: s.name)
    if not gens:
        if not expr.is_Integer:
            raise JetError(f"{text!r} is not an integer polynomial")
        return JetPolynomial.const(int(expr))
    try:
        poly = sympy.Poly(expr, *gens)
    except sympy.PolynomialError as exc:
        raise JetError(f"{text!r} is not a polynomial: {exc}") from None
    terms = {}
    for exps, c in poly.terms():
        if not c.is_Integer:
            raise JetError(f"coefficient {c} of {text!r} is not an integer")
        terms[_mono(((i, 0), e) for i, e in enumerate(exps))] = int(c)
    return JetPolynomial(terms, tuple(s.name for s in gens))


def _series_mul(a: list[JetPolynomial], b: list[JetPolynomial], m: int) -> list[JetPolynomial]:
    out = [JetPolynomial() for _ in range(m + 1)]
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j in range(m + 1 - i):
            if not b[j].is_zero():
                out[i + j] = out[i + j] + ai * b[j]
    return out


def jet_expand(f: JetPolynomial, m: int) -> list[JetPolynomial]:
    """Coefficients of t^0..t^m after substituting truncated series for every variable."""
    if m < 0:
        raise JetError("m must be non-negative")
    if any(j != 0 for _, j in f.variables()):
        raise JetError("jet_expand needs a polynomial in level-0 variables")
    out = [JetPolynomial(names=f.names) for _ in range(m + 1)]
    cache: dict[tuple[int, int], list[JetPolynomial]] = {}

    def power(i: int, e: int) -> list[JetPolynomial]:
        if (i, e) not in cache:
            series = [JetPolynomial.var(i, j, f.names) for j in range(m + 1)]
            cache[(i, e)] = series if e == 1 else _series_mul(power(i, e - 1), series, m)
        return cache[(i, e)]

    for mono, c in f.ordered_terms():
        acc = [JetPolynomial.const(c, f.names)] + [JetPolynomial() for _ in range(m)]
        for (i, _), e in mono:
            acc = _series_mul(acc, power(i, e), m)
        out = [o + a for o, a in zip(out, acc)]
    return [JetPolynomial(o.terms, f.names) for o in out]


def generic_matrix(n: int, traceless: bool = True) -> list[list[JetPolynomial]]:
    if n < 1:
        raise JetError("n must be positive")
    X = [[JetPolynomial.var(a * n + b) for b in range(n)] for a in range(n)]
    if traceless:
        last = JetPolynomial()
        for a in range(n - 1):
            last = last - X[a][a]
        X[n - 1][n - 1] = last
    return X


def _matmul(A, B):
    n = len(A)
    out = []
    for a in range(n):
        row = []
        for b in range(n):
            acc = JetPolynomial()
            for k in range(n):
                if not A[a][k].is_zero() and not B[k][b].is_zero():
                    acc = acc + A[a][k] * B[k][b]
            row.append(acc)
        out.append(row)
    return out


def matrix_power_jet_ideal(n: int, d: int, m: int, traceless: bool = True) -> list[JetPolynomial]:
    """Generators of the m-jets of {X : X^d = 0} (with tr X^2 = 0 added when d = 3).

    Order: jet level first, then the entries of X^d row by row, then the trace
    polynomial.  Entries that vanish identically are kept as zero generators so
    that positions stay meaningful.
    """
    if n < 2:
        raise JetError("n must be at least 2")
    if d not in (2, 3):
        raise JetError(f"power {d} is not supported; use 2 or 3")
    if m < 0:
        raise JetError("m must be non-negative")
    X = generic_matrix(n, traceless)
    P = X
    for _ in range(d - 1):
        P = _matmul(P, X)
    base = [P[a][b] for a in range(n) for b in range(n)]
    if d == 3:
        sq = _matmul(X, X)
        tr = JetPolynomial()
        for a in range(n):
            tr = tr + sq[a][a]
        base.append(tr)
    expanded = [jet_expand(f, m) for f in base]
    return [e[j] for j in range(m + 1) for e in expanded]


def homogeneous_min_degree(gens: Sequence[JetPolynomial]) -> int:
    degs = []
    for g in gens:
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise JetError(f"generator {g} is not homogeneous")
        degs.append(next(iter(g.degrees())))
    if not degs:
        raise JetError("no nonzero generators")
    return min(degs)


def evaluate(f: JetPolynomial, point: Mapping[Key, int]) -> int:
    total = 0
    for mono, c in f.terms.items():
        v = c
        for k, e in mono:
            if k not in point:
                raise JetError(f"no value for variable {f.var_name(k)}")
            v *= point[k] ** e
        total += v
    return total


def ideal_to_json(gens: Sequence[JetPolynomial], m: int) -> str:
    names = next((g.names for g in gens if g.names), None)
    doc = {"order": m, "variables": list(names) if names else None,
           "generators": [g.to_json_terms() for g in gens]}
    return json.dumps(doc, sort_keys=True)


def ideal_from_json(text: str) -> list[JetPolynomial]:
    doc = json.loads(text)
    return [JetPolynomial.from_json_terms(t, doc.get("variables")) for t in doc["generators"]]
