"""The algebra A_{G,lambda} on the basis {b delta_g : b in B, g in G}.

Multiplication of basis elements::

    (b delta_g)(b' delta_h) = [g = wt(b') h] * NF(b b')|_{F = f(h)} delta_h

where wt is the adjoint weight of a word and f(h) = lambda (1 - chi_z(h)^-1).
Products of B-words are reduced once, symbolically in F, and cached.

Scalars are kept as :class:`fractions.Fraction` when rational and as
:class:`~tetrahopf.scalars.Cyclotomic` otherwise; both mix freely.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .linalg import nullspace
from .realization import YDRealization, z_weight_is_e
from .report import Report
from .rewrite import (
    BasisChange,
    M_TOP,
    RuleSystem,
    base_relations,
    complete,
    parse_word,
    word_str,
)
from .scalars import Cyclotomic, parse_cyclotomic, scalar_str

B_LIST = ("010203", "020123", "102013", "120120", "012012")


def simplify(x):
    """Rational cyclotomics become Fractions; everything else is returned as is."""
    if isinstance(x, Cyclotomic):
        return x.c[0] if x.is_rational() else x
    if isinstance(x, int):
        return Fraction(x)
    return x


class AlgebraElem:
    """Sparse combination of basis elements ``(B-word, group index) -> scalar``."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: "AlgebraContext", terms=None):
        self.ctx = ctx
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = simplify(c)
                if c:
                    self.terms[k] = c

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def _combine(self, other, sign):
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = simplify(out.get(k, 0) + sign * c)
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        e = AlgebraElem(self.ctx)
        e.terms = out
        return e

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "AlgebraElem":
        c = simplify(c)
        e = AlgebraElem(self.ctx)
        if c:
            e.terms = {k: simplify(v * c) for k, v in self.terms.items()}
        return e

    def __mul__(self, other):
        if isinstance(other, AlgebraElem):
            return self.ctx.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(1 / simplify(other))

    def __eq__(self, other):
        if not isinstance(other, AlgebraElem):
            return NotImplemented
        return not (self - other).terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def right_weights(self) -> set[int]:
        return {g for _, g in self.terms}

    def adjoint_weights(self) -> set[int]:
        wt = self.ctx.word_weight
        return {wt[b] for b, _ in self.terms}

    def at(self, g: int) -> dict[str, object]:
        """Coefficients of the component A delta_g as ``B-word -> scalar``."""
        return {b: c for (b, h), c in self.terms.items() if h == g}

    def to_list(self) -> list[dict]:
        G = self.ctx.group
        rows = [
            {"word": word_str(b), "group": G.label(g), "coeff": scalar_str(c)}
            for (b, g), c in sorted(self.terms.items(), key=lambda t: (len(t[0][0]), t[0][0], t[0][1]))
        ]
        return rows

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"({scalar_str(c)})*{word_str(b)}*d[{self.ctx.group.label(g)}]" for (b, g), c in sorted(self.terms.items())]
        return " + ".join(parts)


class AlgebraContext:
    """A_{G,lambda} for a realization and a deformation parameter lambda."""

    def __init__(self, realization: YDRealization, lam=1, rules: RuleSystem | None = None, degree_bound: int | None = 12):
        self.realization = realization
        self.group = G = realization.group
        if isinstance(lam, str):
            lam = parse_cyclotomic(lam, realization.chi.order)
        self.lam = simplify(lam)
        order = realization.chi.order
        if isinstance(self.lam, Cyclotomic):
            order = order * self.lam.n // gcd(order, self.lam.n)
        self.order = order
        self.rules = rules if rules is not None else complete(base_relations(), degree_bound)
        self.basis_change = BasisChange(self.rules)
        self.words = list(self.basis_change.words)
        self.word_index = {w: i for i, w in enumerate(self.words)}
        self.word_weight = {w: realization.word_weight(w) for w in self.words}
        chi = realization.chi
        self.f_values = [simplify(self.lam * (1 - (chi(g) ** 6).inverse())) for g in G.elements()]
        self.kernel = [g for g in G.elements() if chi(g) ** 6 == 1]
        self._kernel_set = frozenset(self.kernel)
        self._products: dict[tuple[str, str], tuple] = {}
        self._fpow: dict[tuple[int, int], object] = {}
        self._lock = threading.Lock()

    # -- bookkeeping ------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.words) * self.group.size

    def f(self, g: int):
        return self.f_values[g]

    def in_kernel(self, g: int) -> bool:
        return g in self._kernel_set

    @property
    def is_bosonization(self) -> bool:
        """True when lambda = 0 or chi_z is trivial."""
        return not self.lam or len(self.kernel) == self.group.size

    def _f_power(self, g: int, k: int):
        if k == 0:
            return Fraction(1)
        key = (g, k)
        v = self._fpow.get(key)
        if v is None:
            v = simplify(self.f_values[g] ** k)
            self._fpow[key] = v
        return v

    def word_product(self, u: str, v: str) -> tuple:
        """NF(u v) on B as a tuple of ``(B-word, F-degree, coeff)``; cached."""
        key = (u, v)
        res = self._products.get(key)
        if res is None:
            coords = self.basis_change.word_coords(u + v)
            res = tuple((b, k, c) for b, poly in coords.items() for k, c in poly.items() if c)
            with self._lock:
                self._products[key] = res
        return res

    def word_at(self, word: str, g: int) -> dict[str, object]:
        """NF(word) at F = f(g), on B."""
        out: dict[str, object] = {}
        for b, k, c in self.word_product(word, ""):
            v = simplify(out.get(b, 0) + c * self._f_power(g, k))
            if v:
                out[b] = v
            else:
                out.pop(b, None)
        return out

    # -- elements ---------------------------------------------------------
    def zero(self) -> AlgebraElem:
        return AlgebraElem(self)

    def delta(self, g: int) -> AlgebraElem:
        return AlgebraElem(self, {("", g): 1})

    def one(self) -> AlgebraElem:
        return AlgebraElem(self, {("", g): 1 for g in self.group.elements()})

    def word(self, word: str | tuple, g: int | None = None) -> AlgebraElem:
        """``word * delta_g`` (or ``word * 1`` when g is None), reduced."""
        if not isinstance(word, str):
            word = "".join(word)
        elif word and not set(word) <= set("0123"):
            word = parse_word(word)
        gs = self.group.elements() if g is None else (g,)
        terms = {}
        for h in gs:
            for b, c in self.word_at(word, h).items():
                terms[(b, h)] = c
        return AlgebraElem(self, terms)

    def x(self, i: int) -> AlgebraElem:
        return self.word(str(i))

    def f_elem(self) -> AlgebraElem:
        return AlgebraElem(self, {("", g): self.f_values[g] for g in self.group.elements()})

    def basis(self):
        for b in self.words:
            for g in self.group.elements():
                yield (b, g)

    def basis_elem(self, b: str, g: int) -> AlgebraElem:
        return AlgebraElem(self, {(b, g): 1})

    def elem_from_list(self, rows: list[dict]) -> AlgebraElem:
        """Inverse of :meth:`AlgebraElem.to_list`."""
        G = self.group
        terms = {}
        for r in rows:
            w = r["word"]
            b = "" if w == "1" else parse_word(w)
            terms[(b, G.element(r["group"]))] = parse_cyclotomic(r["coeff"], self.order)
        return AlgebraElem(self, terms)

    # -- multiplication ---------------------------------------------------
    def mul(self, a: AlgebraElem, b: AlgebraElem) -> AlgebraElem:
        G = self.group
        wt = self.word_weight
        by_left: dict[int, list] = {}
        for (w2, h), c2 in b.terms.items():
            by_left.setdefault(G.table[wt[w2]][h], []).append((w2, h, c2))
        out: dict = {}
        for (w1, g1), c1 in a.terms.items():
            for w2, h, c2 in by_left.get(g1, ()):
                c12 = c1 * c2
                for w3, k, c3 in self.word_product(w1, w2):
                    key = (w3, h)
                    val = c12 * c3
                    if k:
                        val = val * self._f_power(h, k)
                    out[key] = out.get(key, 0) + val
        e = AlgebraElem(self)
        e.terms = {k: v for k, v in ((k, simplify(v)) for k, v in out.items()) if v}
        return e


# -- distinguished elements ---------------------------------------------------

def b_elements(ctx: AlgebraContext) -> tuple[AlgebraElem, ...]:
    if not z_weight_is_e(ctx.realization):
        raise ValueError("z does not have weight e for this realization")
    return tuple(ctx.word(b) for b in B_LIST)


def counit(ctx: AlgebraContext, a: AlgebraElem):
    return simplify(a.terms.get(("", ctx.group.id), 0))


@dataclass
class CharFunctional:
    """chi_g(b delta_h) = [b = 1][h = g]."""

    ctx: AlgebraContext
    g: int

    def __call__(self, a: AlgebraElem):
        return simplify(a.terms.get(("", self.g), 0))

    def is_algebra_map(self) -> bool:
        return self.multiplicativity_witness() is None

    def multiplicativity_witness(self):
        """First pair (u, v) of test basis elements with chi(uv) != chi(u) chi(v).

        Test elements are ``w delta_h`` for words w of length 0, 1 and 3.
        When the right index of v is not g both sides vanish, so only
        v = w' delta_g and u = w delta_{wt(w') g} are tried.
        """
        ctx = self.ctx
        G = ctx.group
        r = ctx.realization
        words = [""] + list("0123") + ["".join(p) for p in product("0123", repeat=3)]
        for w1, w2 in product(words, repeat=2):
            v = ctx.word(w2, self.g)
            u = ctx.word(w1, G.mul(r.word_weight(w2), self.g))
            lhs = self(ctx.mul(u, v))
            rhs = self(u) * self(v)
            if lhs != rhs:
                return (word_str(w1), word_str(w2))
        return None


def chi_g_functional(ctx: AlgebraContext, g: int) -> CharFunctional:
    return CharFunctional(ctx, g)


def m_top_and_gtop(ctx: AlgebraContext) -> tuple[AlgebraElem, int]:
    return ctx.word(M_TOP), ctx.realization.word_weight(M_TOP)


class IntegralError(ArithmeticError):
    pass


def _solve(ctx: AlgebraContext, unknowns, operators) -> list[AlgebraElem]:
    """Basis of {t in span(unknowns) : op(t) = 0 for every op}."""
    rows: dict = {}
    for u in unknowns:
        e = ctx.basis_elem(*u)
        for n, op in enumerate(operators):
            for key, c in op(e).terms.items():
                rows.setdefault((n, key), {})[u] = c
    sols = nullspace(rows.values(), list(unknowns))
    return [AlgebraElem(ctx, s) for s in sols]


def left_integrals(ctx: AlgebraContext) -> list[AlgebraElem]:
    """Solve x_i t = 0 and delta_g t = [g = e] t over all of A."""
    G = ctx.group
    xs = [ctx.x(i) for i in range(4)]
    e = G.id
    # delta_g t = [g = e] t forces wt(b) h = e on every term (b, h)
    unknowns = []
    dropped = []
    for b, h in ctx.basis():
        (unknowns if G.mul(ctx.word_weight[b], h) == e else dropped).append((b, h))
    ops = [lambda t, x=x: ctx.mul(x, t) for x in xs]
    ops += [lambda t, g=g: ctx.mul(ctx.delta(g), t) - (t if g == e else ctx.zero()) for g in G.elements()]
    sols = _solve(ctx, unknowns, ops)
    # the dropped unknowns are excluded by the delta equations; confirm that
    for u in dropped:
        t = ctx.basis_elem(*u)
        g = G.mul(ctx.word_weight[u[0]], u[1])
        if ctx.mul(ctx.delta(g), t) != t:
            raise AssertionError("delta equations do not exclude a dropped unknown")
    if len(sols) != 1:
        raise IntegralError(f"space of left integrals has dimension {len(sols)}")
    return sols


def right_integrals(ctx: AlgebraContext) -> list[AlgebraElem]:
    """Solve t x_i = 0 and t delta_g = [g = e] t."""
    G = ctx.group
    e = G.id
    xs = [ctx.x(i) for i in range(4)]
    # t delta_g = [g = e] t forces every term to sit at delta_e
    unknowns = [(b, e) for b in ctx.words]
    ops = [lambda t, x=x: ctx.mul(t, x) for x in xs]
    ops += [lambda t, g=g: ctx.mul(t, ctx.delta(g)) - (t if g == e else ctx.zero()) for g in G.elements()]
    sols = _solve(ctx, unknowns, ops)
    if len(sols) != 1:
        raise IntegralError(f"space of right integrals has dimension {len(sols)}")
    return sols


def distinguished_grouplike(ctx: AlgebraContext) -> int:
    """The g with a t = chi_g(a) t on generators, t a right integral."""
    (t,) = right_integrals(ctx)
    G = ctx.group
    xs = [ctx.x(i) for i in range(4)]
    if any(ctx.mul(x, t) for x in xs):
        raise IntegralError("x_i t != 0, so no chi_g can be distinguished")
    found = [
        g for g in G.elements()
        if all(ctx.mul(ctx.delta(h), t) == (t if h == g else ctx.zero()) for h in G.elements())
    ]
    if len(found) != 1:
        raise IntegralError(f"{len(found)} candidates for the distinguished group-like")
    return found[0]


# expected b_i b_j as (sign, k): b_i b_j = sign * b_k f, or None for 0
BIBJ = {
    (1, 1): (-1, 1), (1, 5): (1, 1),
    (2, 2): (-1, 2),
    (3, 3): (1, 3), (3, 4): (1, 3),
    (4, 3): (1, 3), (4, 4): (1, 4),
    (5, 1): (1, 1), (5, 5): (1, 5),
}


def verify_bibj(ctx: AlgebraContext) -> Report:
    rep = Report("bibj")
    bs = b_elements(ctx)
    f = ctx.f_elem()
    for i, j in product(range(1, 6), repeat=2):
        got = ctx.mul(bs[i - 1], bs[j - 1])
        exp = BIBJ.get((i, j))
        if exp is None:
            want = ctx.zero()
            text = "0"
        else:
            sign, k = exp
            want = ctx.mul(bs[k - 1], f).scale(sign)
            text = f"{'-' if sign < 0 else ''}b{k} f"
        name = f"b{i} b{j} = {text}"
        rep.add(name, got == want, None if got == want else repr(got - want)[:200])
    return rep
