"""Root systems of the simple types in standard coordinates, Bourbaki numbering.

All coordinates are stored doubled, so half-integer vectors (E8, F4) become
integer tuples and every pairing is computed exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

Vector = tuple[int, ...]

EXCEPTIONAL_RANK = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}


def _dot(u: Vector, v: Vector) -> int:
    return sum(a * b for a, b in zip(u, v))


def _unit(dim: int, i: int, c: int = 2) -> list[int]:
    v = [0] * dim
    v[i] = c
    return v


@dataclass(frozen=True)
class RootSystem:
    type: str
    rank: int
    roots: tuple[Vector, ...]
    simple: tuple[Vector, ...]

    def pairing(self, beta: int, alpha: Vector) -> int:
        """Cartan integer <beta^vee, alpha> for the simple root with 1-based index beta."""
        b = self.simple[beta - 1]
        num, den = 2 * _dot(b, alpha), _dot(b, b)
        if num % den:
            raise ArithmeticError(f"non-integral pairing {num}/{den}")
        return num // den

    def cartan_matrix(self) -> list[list[int]]:
        return [[self.pairing(i, self.simple[j - 1]) for j in range(1, self.rank + 1)]
                for i in range(1, self.rank + 1)]

    def coefficients(self, alpha: Vector) -> tuple[int, ...]:
        """Coordinates of alpha in the simple-root basis (exact; raises if not integral)."""
        gram = np.array([[_dot(a, b) for b in self.simple] for a in self.simple], dtype=float)
        rhs = np.array([_dot(a, alpha) for a in self.simple], dtype=float)
        c = tuple(int(round(x)) for x in np.linalg.solve(gram, rhs))
        back = tuple(sum(ci * s[k] for ci, s in zip(c, self.simple)) for k in range(len(alpha)))
        if back != tuple(alpha):
            raise ArithmeticError(f"{alpha} is not an integral combination of simple roots")
        return c

    def positive_roots(self) -> list[Vector]:
        return [a for a in self.roots if sum(self.coefficients(a)) > 0]

    def is_long(self, i: int) -> bool:
        lengths = {_dot(a, a) for a in self.roots}
        return _dot(self.simple[i - 1], self.simple[i - 1]) == max(lengths)


def _type_a(r: int):
    dim = r + 1
    roots = [tuple(_unit(dim, i)[k] - _unit(dim, j)[k] for k in range(dim))
             for i in range(dim) for j in range(dim) if i != j]
    simple = [tuple(_unit(dim, i)[k] - _unit(dim, i + 1)[k] for k in range(dim)) for i in range(r)]
    return roots, simple


def _pm_pairs(dim: int) -> list[Vector]:
    out = []
    for i, j in itertools.combinations(range(dim), 2):
        for si, sj in itertools.product((2, -2), repeat=2):
            v = [0] * dim
            v[i], v[j] = si, sj
            out.append(tuple(v))
    return out


def _chain(dim: int) -> list[Vector]:
    out = []
    for i in range(dim - 1):
        v = [0] * dim
        v[i], v[i + 1] = 2, -2
        out.append(tuple(v))
    return out


def _type_b(r: int):
    roots = _pm_pairs(r) + [tuple(_unit(r, i, s)) for i in range(r) for s in (2, -2)]
    return roots, _chain(r) + [tuple(_unit(r, r - 1))]


def _type_c(r: int):
    roots = _pm_pairs(r) + [tuple(_unit(r, i, s)) for i in range(r) for s in (4, -4)]
    return roots, _chain(r) + [tuple(_unit(r, r - 1, 4))]


def _type_d(r: int):
    last = [0] * r
    last[r - 2] = last[r - 1] = 2
    return _pm_pairs(r), _chain(r) + [tuple(last)]


def _type_g2():
    # plane x+y+z = 0 in R^3; short roots e_i - e_j, long roots 2e_i - e_j - e_k
    roots = []
    for i, j in itertools.permutations(range(3), 2):
        v = [0, 0, 0]
        v[i], v[j] = 2, -2
        roots.append(tuple(v))
    for i in range(3):
        v = [-2, -2, -2]
        v[i] = 4
        roots += [tuple(v), tuple(-x for x in v)]
    return roots, [(2, -2, 0), (-4, 2, 2)]


def _type_f4():
    roots = _pm_pairs(4) + [tuple(_unit(4, i, s)) for i in range(4) for s in (2, -2)]
    roots += [tuple(s) for s in itertools.product((1, -1), repeat=4)]
    simple = [(0, 2, -2, 0), (0, 0, 2, -2), (0, 0, 0, 2), (1, -1, -1, -1)]
    return roots, simple


def _type_e8():
    roots = _pm_pairs(8)
    roots += [s for s in itertools.product((1, -1), repeat=8) if s.count(-1) % 2 == 0]
    simple = [(1, -1, -1, -1, -1, -1, -1, 1), (2, 2, 0, 0, 0, 0, 0, 0)]
    for i in range(6):
        v = [0] * 8
        v[i], v[i + 1] = -2, 2
        simple.append(tuple(v))
    return roots, simple


def _restrict(roots, simple, keep: int):
    # roots of the span of the first `keep` simple roots
    full = RootSystem("E8", 8, tuple(roots), tuple(simple))
    sub = [a for a in roots if all(c == 0 for c in full.coefficients(a)[keep:])]
    return sub, simple[:keep]


@lru_cache(maxsize=None)
def build(type: str, rank: int | None = None) -> RootSystem:
    t = type.upper()
    if t in EXCEPTIONAL_RANK:
        if rank not in (None, EXCEPTIONAL_RANK[t]):
            raise ValueError(f"{t} has rank {EXCEPTIONAL_RANK[t]}, not {rank}")
        rank = EXCEPTIONAL_RANK[t]
        if t == "G2":
            roots, simple = _type_g2()
        elif t == "F4":
            roots, simple = _type_f4()
        else:
            roots, simple = _type_e8()
            if t != "E8":
                roots, simple = _restrict(roots, simple, rank)
        return RootSystem(t, rank, tuple(roots), tuple(simple))
    if rank is None or rank < 1:
        raise ValueError(f"type {t} needs a positive rank")
    builders = {"A": (_type_a, 1), "B": (_type_b, 2), "C": (_type_c, 1), "D": (_type_d, 2)}
    if t not in builders:
        raise ValueError(f"unknown root system type {type!r}")
    fn, min_rank = builders[t]
    if rank < min_rank:
        raise ValueError(f"{t}{rank} is not a valid type")
    roots, simple = fn(rank)
    return RootSystem(t, rank, tuple(roots), tuple(simple))


def parse_type(text: str) -> tuple[str, int]:
    """"E7" -> ("E7", 7); "D6" -> ("D", 6)."""
    t = text.strip().upper()
    if t in EXCEPTIONAL_RANK:
        return t, EXCEPTIONAL_RANK[t]
    if len(t) >= 2 and t[0] in "ABCD" and t[1:].isdigit():
        return t[0], int(t[1:])
    raise ValueError(f"cannot parse root system type {text!r}")


def build_from_name(text: str) -> RootSystem:
    return build(*parse_type(text))


def algebra_dim_from_roots(rs: RootSystem) -> int:
    return len(rs.roots) + rs.rank


def levi_condition_i(rs: RootSystem, subset) -> bool:
    """Every root pairs nontrivially with some simple coroot from the subset."""
    subset = sorted(set(subset))
    if any(not 1 <= s <= rs.rank for s in subset):
        raise ValueError(f"node subset {subset} out of range for rank {rs.rank}")
    return all(any(rs.pairing(b, alpha) for b in subset) for alpha in rs.roots)


def dynkin_components(rs: RootSystem, subset) -> list[tuple[str, tuple[int, ...]]]:
    """Connected components of the Dynkin subdiagram on `subset`, ordered by smallest node.

    Each component is returned with its type name ("A3", "B2", "C3", "D5", "E6", ...)
    and its node list.
    """
    nodes = sorted(set(subset))
    cm = rs.cartan_matrix()
    seen: set[int] = set()
    out = []
    for start in nodes:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in nodes:
                if w not in seen and cm[v - 1][w - 1]:
                    seen.add(w)
                    stack.append(w)
        comp.sort()
        out.append((_component_type(rs, comp, cm), tuple(comp)))
    return out


def _component_type(rs: RootSystem, comp: list[int], cm) -> str:
    k = len(comp)
    degree = {v: sum(1 for w in comp if w != v and cm[v - 1][w - 1]) for v in comp}
    lengths = {v: _dot(rs.simple[v - 1], rs.simple[v - 1]) for v in comp}
    if len(set(lengths.values())) > 1:
        if k == 2 and max(lengths.values()) == 3 * min(lengths.values()):
            return "G2"
        n_long = sum(1 for v in comp if lengths[v] == max(lengths.values()))
        if k == 4:
            return "F4"
        if k == 2:
            return "B2"
        return f"B{k}" if n_long == k - 1 else f"C{k}"
    branch = [v for v in comp if degree[v] == 3]
    if not branch:
        return f"A{k}"
    # arm lengths from the branch node decide D versus E
    b = branch[0]
    arms = []
    for w in comp:
        if w != b and cm[b - 1][w - 1]:
            length, prev, cur = 1, b, w
            while True:
                nxt = [u for u in comp if u not in (prev, cur) and cm[cur - 1][u - 1]]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{k}"
    return f"E{k}"
