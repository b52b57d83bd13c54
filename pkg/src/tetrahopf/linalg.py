"""Exact sparse linear algebra over any field whose elements support
``+ - * /`` and truthiness as a zero test (Fraction, Cyclotomic).

Vectors are dicts ``index -> nonzero scalar``.
"""

from __future__ import annotations

from typing import Hashable, Iterable

Vec = dict


def vadd(u: Vec, v: Vec, scale=1) -> Vec:
    out = dict(u)
    for k, c in v.items():
        val = out.get(k, 0) + c * scale
        if val:
            out[k] = val
        else:
            out.pop(k, None)
    return out


def vscale(v: Vec, c) -> Vec:
    if not c:
        return {}
    return {k: x * c for k, x in v.items()}


def _pivot(v: Vec, order: dict | None):
    if order is None:
        return min(v)
    return min(v, key=order.__getitem__)


class Echelon:
    """Incrementally maintained echelon basis of a span.

    Each stored row remembers how it was obtained from the vectors passed to
    :meth:`add`, so coordinates with respect to those vectors can be
    recovered.
    """

    def __init__(self, order: dict | None = None, track: bool = True):
        self.rows: dict[Hashable, tuple[Vec, Vec]] = {}  # pivot -> (row normalised at pivot, combination)
        self.order = order
        self.track = track
        self.count = 0

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Vec):
        """Return (residual, combination) with v = residual + sum comb[i] * added_i."""
        v = dict(v)
        comb: Vec = {}
        changed = True
        while v and changed:
            changed = False
            for p in list(v):
                if p in self.rows and p in v:
                    row, rc = self.rows[p]
                    c = v[p]
                    v = vadd(v, row, -c)
                    if self.track:
                        comb = vadd(comb, rc, c)
                    changed = True
        return v, comb

    def add(self, v: Vec) -> bool:
        """Add v; return False when it is already in the span."""
        idx = self.count
        res, comb = self.reduce(v)
        if not res:
            return False
        self.count += 1
        # res = v - sum comb * added  ->  combination for res is e_idx - comb
        rc = vadd({idx: 1}, comb, -1) if self.track else {}
        p = _pivot(res, self.order)
        inv = 1 / res[p]
        res = vscale(res, inv)
        rc = vscale(rc, inv)
        # keep rows fully reduced at their pivots
        for q, (row, qc) in list(self.rows.items()):
            if p in row:
                c = row[p]
                self.rows[q] = (vadd(row, res, -c), vadd(qc, rc, -c) if self.track else {})
        self.rows[p] = (res, rc)
        return True

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)[0]

    def coordinates(self, v: Vec) -> Vec | None:
        """Coefficients of v on the independent vectors added so far (by
        insertion rank), or None if v is outside the span."""
        res, comb = self.reduce(v)
        if res:
            return None
        return comb


def rank(vectors: Iterable[Vec]) -> int:
    e = Echelon(track=False)
    for v in vectors:
        e.add(v)
    return len(e)


def independent_subset(vectors: list[Vec]) -> list[int]:
    e = Echelon(track=False)
    return [i for i, v in enumerate(vectors) if e.add(v)]


def nullspace(rows: Iterable[Vec], unknowns: list[Hashable]) -> list[Vec]:
    """Basis of {x : row . x = 0 for every row}; x indexed by ``unknowns``."""
    order = {u: i for i, u in enumerate(unknowns)}
    e = Echelon(order=order, track=False)
    for r in rows:
        e.add(r)
    pivots = set(e.rows)
    basis = []
    for free in unknowns:
        if free in pivots:
            continue
        x = {free: 1}
        for p, (row, _) in e.rows.items():
            c = row.get(free)
            if c:
                x[p] = -c
        basis.append(x)
    return basis


def intersect(basis_a: list[Vec], basis_b: list[Vec]) -> list[Vec]:
    """Basis of span(a) ∩ span(b)."""
    # solve sum s_i a_i = sum t_j b_j
    keys = set()
    for v in basis_a + basis_b:
        keys.update(v)
    unknowns = [("a", i) for i in range(len(basis_a))] + [("b", j) for j in range(len(basis_b))]
    rows = []
    for k in keys:
        r = {}
        for i, v in enumerate(basis_a):
            if k in v:
                r[("a", i)] = v[k]
        for j, v in enumerate(basis_b):
            if k in v:
                r[("b", j)] = -v[k]
        if r:
            rows.append(r)
    out = Echelon(track=False)
    for sol in nullspace(rows, unknowns):
        vec: Vec = {}
        for (side, i), c in sol.items():
            if side == "a":
                vec = vadd(vec, basis_a[i], c)
        if vec:
            out.add(vec)
    return [row for row, _ in out.rows.values()]


def invert(matrix: dict[Hashable, Vec], keys: list[Hashable]) -> dict[Hashable, Vec]:
    """Inverse of a square matrix given column-wise: ``matrix[j]`` is column j
    as a vector indexed by row keys.  Returns columns of the inverse, i.e.
    ``inv[r]`` expresses unit vector r in terms of the columns."""
    e = Echelon()
    order = list(keys)
    for j in order:
        if not e.add(matrix[j]):
            raise ZeroDivisionError("singular matrix")
    out = {}
    for r in order:
        comb = e.coordinates({r: 1})
        out[r] = {order[i]: c for i, c in comb.items()}
    return out
