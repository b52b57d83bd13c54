"""Modules over A_{G,lambda}: Vermas, idempotents, simples, decompositions,
radicals, extensions between one-dimensional simples, and the spherical test.

Every module here is weight graded: basis vectors are homogeneous for the
k^G-action, so delta_g acts as the projection onto weight g and only the four
generators need matrices.
"""

from __future__ import annotations

import csv
from collections import Counter
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import appendix
from .algebra import AlgebraContext, AlgebraElem, B_LIST, simplify
from .linalg import Echelon, nullspace, rank, vadd, vscale
from .realization import EpimorphismError, epimorphism_to_F4C6, normalize_label
from .report import Report
from .rewrite import base_relations, word_str
from .scalars import scalar_str


# -- modules ---------------------------------------------------------------

@dataclass(eq=False)
class Module:
    """``action[i][j]`` is x_i applied to basis vector j, as ``{index: scalar}``."""

    weights: list[int]
    action: list[list[dict]]
    labels: list[str] | None = None
    embedding: list[dict] | None = None  # basis vectors inside a parent module

    @property
    def dim(self) -> int:
        return len(self.weights)

    @cached_property
    def support(self) -> frozenset[int]:
        return frozenset(self.weights)

    def weight_space(self, g: int) -> list[int]:
        return [j for j, w in enumerate(self.weights) if w == g]

    def apply(self, i: int, v: dict) -> dict:
        out: dict = {}
        col = self.action[i]
        for j, c in v.items():
            for k, a in col[j].items():
                out[k] = out.get(k, 0) + c * a
        return {k: s for k, s in ((k, simplify(s)) for k, s in out.items()) if s}

    def apply_word(self, word: str, v: dict) -> dict:
        """x_{i1} ... x_{il} v, rightmost letter first."""
        for ch in reversed(word):
            if not v:
                break
            v = self.apply(int(ch), v)
        return v

    def apply_elem(self, a: AlgebraElem, v: dict) -> dict:
        """Action of an algebra element; v must be weight homogeneous."""
        if not v:
            return {}
        g = self.weights[next(iter(v))]
        out: dict = {}
        for (b, h), c in a.terms.items():
            if h == g:
                out = vadd(out, self.apply_word(b, v), c)
        return out

    def check_relations(self, ctx: AlgebraContext) -> Report:
        """Defining relations as matrix identities, z acting by f(weight)."""
        rep = Report("module relations")
        G = ctx.group
        r = ctx.realization
        bad = None
        for i in range(4):
            for j in range(self.dim):
                for k in self.action[i][j]:
                    if self.weights[k] != G.mul(r.gmap_inv[i], self.weights[j]):
                        bad = (i, j, k)
        rep.add("x_i maps weight h to g_i^-1 h", bad is None, bad)
        rels = base_relations()
        for n, rel in enumerate(rels):
            bad = None
            for j in range(self.dim):
                unit = {j: Fraction(1)}
                acc: dict = {}
                for (w, k), c in rel.terms.items():
                    scal = c * ctx._f_power(self.weights[j], k) if k else c
                    acc = vadd(acc, self.apply_word(w, unit), scal)
                if acc:
                    bad = j
                    break
            rep.add(f"relation {n + 1}", bad is None, bad)
        return rep

    def direct_sum(self, other: "Module") -> "Module":
        n = self.dim
        act = [
            [dict(c) for c in self.action[i]] + [{k + n: a for k, a in c.items()} for c in other.action[i]]
            for i in range(4)
        ]
        labels = None
        if self.labels and other.labels:
            labels = [f"{l}" for l in self.labels] + [f"{l}'" for l in other.labels]
        return Module(self.weights + other.weights, act, labels)

    def restrict(self, indices: list[int]) -> "Module":
        """Submodule spanned by a subset of basis vectors closed under the action."""
        pos = {j: n for n, j in enumerate(indices)}
        act = []
        for i in range(4):
            cols = []
            for j in indices:
                img = self.action[i][j]
                if any(k not in pos for k in img):
                    raise ValueError("basis subset is not a submodule")
                cols.append({pos[k]: a for k, a in img.items()})
            act.append(cols)
        labels = [self.labels[j] for j in indices] if self.labels else None
        return Module([self.weights[j] for j in indices], act, labels, [{j: Fraction(1)} for j in indices])

    def to_dict(self, ctx: AlgebraContext) -> dict:
        G = ctx.group
        names = ("x0", "x1", "xw", "xw2")
        return {
            "dim": self.dim,
            "basis": self.labels or [f"v{j + 1}" for j in range(self.dim)],
            "weights": [G.label(w) for w in self.weights],
            "action": {
                names[i]: [[scalar_str(self.action[i][j].get(k, 0)) for j in range(self.dim)] for k in range(self.dim)]
                for i in range(4)
            },
        }

    def to_json(self, ctx: AlgebraContext) -> str:
        return json.dumps(self.to_dict(ctx), indent=1)


def one_dimensional(ctx: AlgebraContext, h: int) -> Module:
    if not ctx.in_kernel(h):
        raise ValueError("k_h is a module only for h in ker chi_z")
    return Module([h], [[{}] for _ in range(4)], [f"k[{ctx.group.label(h)}]"])


def verma(ctx: AlgebraContext, g: int) -> Module:
    """M_g = A delta_g on the basis B delta_g."""
    G = ctx.group
    words = ctx.words
    idx = ctx.word_index
    weights = [G.mul(ctx.word_weight[b], g) for b in words]
    act = []
    for i in range(4):
        cols = []
        for b in words:
            col: dict = {}
            for b2, k, c in ctx.word_product(str(i), b):
                v = c * ctx._f_power(g, k) if k else c
                col[idx[b2]] = simplify(col.get(idx[b2], 0) + v)
            cols.append({j: c for j, c in col.items() if c})
        act.append(cols)
    return Module(weights, act, [word_str(b) for b in words])


def vector_of(ctx: AlgebraContext, a: AlgebraElem, g: int) -> dict:
    """The component a delta_g as a vector of verma(g)."""
    return {ctx.word_index[b]: c for b, c in a.at(g).items()}


def generated_submodule(M: Module, seeds: list[dict]) -> Module:
    """A . span(seeds) for weight-homogeneous seeds, with a homogeneous basis."""
    spaces: dict[int, Echelon] = {}
    basis: list[dict] = []
    queue = list(seeds)
    while queue:
        v = queue.pop()
        if not v:
            continue
        w = M.weights[next(iter(v))]
        ech = spaces.setdefault(w, Echelon(track=False))
        res, _ = ech.reduce(v)
        if not res:
            continue
        ech.add(res)
        basis.append(v)
        for i in range(4):
            queue.append(M.apply(i, v))
    return _submodule_on(M, basis)


def _submodule_on(M: Module, basis: list[dict]) -> Module:
    by_weight: dict[int, list[int]] = {}
    for n, v in enumerate(basis):
        by_weight.setdefault(M.weights[next(iter(v))], []).append(n)
    solvers = {}
    for w, ns in by_weight.items():
        e = Echelon()
        for n in ns:
            e.add(basis[n])
        solvers[w] = (e, ns)
    act = []
    for i in range(4):
        cols = []
        for v in basis:
            img = M.apply(i, v)
            if not img:
                cols.append({})
                continue
            e, ns = solvers.get(M.weights[next(iter(img))], (None, None))
            coords = e.coordinates(img) if e is not None else None
            if coords is None:
                raise ValueError("span is not closed under the action")
            cols.append({ns[r]: c for r, c in coords.items()})
        act.append(cols)
    weights = [M.weights[next(iter(v))] for v in basis]
    return Module(weights, act, None, basis)


# -- idempotents ---------------------------------------------------------------

@dataclass
class IdempotentSet:
    g: int
    members: list[AlgebraElem]


class IdempotentError(ArithmeticError):
    pass


def raw_idempotents(ctx: AlgebraContext, g: int) -> list[AlgebraElem]:
    """The commuting idempotents fed to :func:`orthogonalize`, in order."""
    f = ctx.f(g)
    b = [ctx.word(w, g) for w in B_LIST]
    return [b[0].scale(-1 / f), b[1].scale(-1 / f), b[2].scale(1 / f), b[3].scale(1 / f), b[4].scale(1 / f), ctx.delta(g)]


def _closed_form(ctx: AlgebraContext, g: int) -> list[AlgebraElem]:
    f = ctx.f(g)
    b = [ctx.word(w, g) for w in B_LIST]
    d = ctx.delta(g)
    inv = 1 / f
    return [
        b[0].scale(-inv),
        b[1].scale(-inv),
        b[2].scale(inv),
        (b[3] - b[2]).scale(inv),
        (b[4] + b[0]).scale(inv),
        d + (b[1] - b[3] - b[4]).scale(inv),
    ]


def check_idempotents(ctx: AlgebraContext, members: list[AlgebraElem], total: AlgebraElem) -> Report:
    rep = Report("idempotents")
    for i, e in enumerate(members):
        rep.add(f"e{i + 1}^2 = e{i + 1}", ctx.mul(e, e) == e)
        rep.add(f"e{i + 1} != 0", bool(e))
        for j, e2 in enumerate(members):
            if j != i:
                rep.add(f"e{i + 1} e{j + 1} = 0", not ctx.mul(e, e2))
    s = ctx.zero()
    for e in members:
        s = s + e
    rep.add("sum = delta_g", s == total)
    return rep


def idempotent_set(ctx: AlgebraContext, g: int, verify: bool = True) -> IdempotentSet:
    if ctx.in_kernel(g):
        members = [ctx.delta(g)]
    else:
        members = _closed_form(ctx, g)
    if verify:
        rep = check_idempotents(ctx, members, ctx.delta(g))
        if not rep:
            raise IdempotentError(f"idempotents at {ctx.group.label(g)}: {rep.first_failure().name}")
    return IdempotentSet(g, members)


def orthogonalize(ctx: AlgebraContext, elems: list[AlgebraElem]) -> list[AlgebraElem]:
    """e_i = a_i prod_{j<i} (1 - a_j) for commuting idempotents a_1, ..., a_n."""
    for i, a in enumerate(elems):
        if ctx.mul(a, a) != a:
            raise IdempotentError(f"input {i + 1} is not idempotent")
        for b in elems[:i]:
            if ctx.mul(a, b) != ctx.mul(b, a):
                raise IdempotentError("inputs do not commute")
    one = ctx.one()
    out = []
    for i, a in enumerate(elems):
        e = a
        for b in elems[:i]:
            e = ctx.mul(e, one - b)
        out.append(e)
    for i, e in enumerate(out):
        for j in range(i):
            if ctx.mul(e, out[j]) or ctx.mul(out[j], e):
                raise IdempotentError("orthogonalization failed")
    return out


# -- simples -------------------------------------------------------------------

class SimpleError(ArithmeticError):
    pass


def _is_simple(M: Module) -> bool:
    for j in range(M.dim):
        if generated_submodule(M, [{j: Fraction(1)}]).dim != M.dim:
            return False
    return True


def simple_module(ctx: AlgebraContext, i: int, g: int, check: bool = True) -> Module:
    """L_i^g = A e_i^g as a submodule of verma(g)."""
    if ctx.in_kernel(g):
        raise ValueError("L_i^g needs g outside ker chi_z")
    e = _closed_form(ctx, g)[i - 1]
    M = _verma_cached(ctx, g)
    L = generated_submodule(M, [vector_of(ctx, e, g)])
    if L.dim != 12:
        raise SimpleError(f"L_{i}^g has dimension {L.dim}")
    if check and not _is_simple(L):
        raise SimpleError(f"L_{i}^g is not simple")
    return L


def _verma_cached(ctx: AlgebraContext, g: int) -> Module:
    cache = ctx.__dict__.setdefault("_verma_cache", {})
    M = cache.get(g)
    if M is None:
        M = cache[g] = verma(ctx, g)
    return M


def _table_vector(ctx: AlgebraContext, M: Module, terms, g: int) -> dict:
    """sum of sign * f(g)^p * word . delta_g, computed with the Verma matrices only."""
    f = ctx.f(g)
    start = {ctx.word_index[""]: Fraction(1)}
    out: dict = {}
    for sign, fp, w in terms:
        out = vadd(out, M.apply_word(w, start), sign * (f if fp else 1))
    return out


def table_weights_expected(i: int) -> list[str]:
    return [row[i - 1] for row in appendix.WEIGHTS]


def verify_table(ctx: AlgebraContext, i: int, g: int) -> Report:
    """Check one appendix table (and its weight column) cell by cell."""
    rep = Report(f"table {i}")
    rep.data["cells"] = cells = []
    f = ctx.f(g)
    M = _verma_cached(ctx, g)
    rep.extend(M.check_relations(ctx), "verma: ")
    cs = [_table_vector(ctx, M, terms, g) for terms in appendix.VECTORS[i]]
    e = Echelon(track=False)
    rep.add("c_1..c_12 independent", all(e.add(c) for c in cs))
    L = simple_module(ctx, i, g, check=False)
    span_L = Echelon(track=False)
    for v in L.embedding:
        span_L.add(v)
    rep.add("c_k lie in A e_i^g", all(span_L.contains(c) for c in cs))
    k, sign = appendix.IDEMPOTENT_ROWS[i]
    e_i = vector_of(ctx, _closed_form(ctx, g)[i - 1], g)
    ok = cs[k - 1] == vscale(e_i, sign * f)
    rep.add(f"c_{k} = {'-' if sign < 0 else ''}f(g) e_{i}^g", ok)
    names = ("x0", "x1", "xw", "xw2")
    for row, (c, acts) in enumerate(zip(cs, appendix.ACTIONS[i]), start=1):
        for gen, entry in enumerate(acts):
            got = M.apply(gen, c)
            if entry is None:
                want, text = {}, "0"
            else:
                s, fp, n = entry
                want = vscale(cs[n - 1], s * (f if fp else 1))
                text = f"{'-' if s < 0 else ''}{'f(g)' if fp else ''}c{n}"
            ok = _veq(got, want)
            cells.append((f"table{i}", f"c{row}", names[gen], text, "ok" if ok else _show(got, cs, f), ok))
            rep.add(f"{names[gen]} c{row} = {text}", ok)
    try:
        phi = epimorphism_to_F4C6(ctx.realization)
    except EpimorphismError:
        phi = None
    if phi is not None:
        for row, (terms, want) in enumerate(zip(appendix.VECTORS[i], table_weights_expected(i)), start=1):
            ws = {phi.label(ctx.realization.word_weight(w)) for _, _, w in terms}
            got = ws.pop() if len(ws) == 1 else "inhomogeneous"
            ok = normalize_label(got) == normalize_label(want)
            cells.append(("table7", f"c{row}", f"L{i}", want, got, ok))
            rep.add(f"weight of c{row} in L{i} = {want} g", ok, None if ok else got)
            # the weight in G itself must be wt(word) g for the Verma grading
            vec_w = {M.weights[j] for j in cs[row - 1]}
            rep.add(f"c{row} is weight homogeneous", len(vec_w) == 1)
    return rep


def _veq(u: dict, v: dict) -> bool:
    return not vadd(u, v, -1)


def _show(got: dict, cs: list[dict], f) -> str:
    e = Echelon()
    for c in cs:
        e.add(c)
    coords = e.coordinates(got)
    if coords is None:
        return "outside span"
    return " + ".join(f"({scalar_str(c)})c{n + 1}" for n, c in sorted(coords.items())) or "0"


def tables_csv(reports: list[Report]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["table", "row", "column", "expected", "got", "pass"])
    for rep in reports:
        for cell in rep.data.get("cells", ()):
            w.writerow([*cell[:5], "true" if cell[5] else "false"])
    return buf.getvalue()


@dataclass
class SimpleClass:
    kind: str  # "one" or "twelve"
    support: frozenset[int]
    rep: tuple  # (h,) or (i, g)
    members: list[tuple] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return 1 if self.kind == "one" else 12

    def label(self, ctx: AlgebraContext) -> str:
        G = ctx.group
        if self.kind == "one":
            return f"k[{G.label(self.rep[0])}]"
        return f"L[{self.rep[0]},{G.label(self.rep[1])}]"


class ClassificationError(ArithmeticError):
    pass


def simple_supports(ctx: AlgebraContext) -> dict[tuple[int, int], frozenset[int]]:
    cache = ctx.__dict__.setdefault("_simple_cache", {})
    out = {}
    for g in ctx.group.elements():
        if ctx.in_kernel(g):
            continue
        for i in range(1, 7):
            L = cache.get((i, g))
            if L is None:
                L = cache[(i, g)] = simple_module(ctx, i, g)
            out[(i, g)] = L.support
    return out


def classify_simples(ctx: AlgebraContext) -> list[SimpleClass]:
    cached = ctx.__dict__.get("_classes")
    if cached is not None:
        return cached
    classes = [SimpleClass("one", frozenset([h]), (h,), [(h,)]) for h in ctx.kernel]
    by_support: dict[frozenset, SimpleClass] = {}
    for (i, g), supp in sorted(simple_supports(ctx).items(), key=lambda t: (t[0][0], t[0][1])):
        if len(supp) != 12:
            raise ClassificationError(f"support of L_{i}^g has {len(supp)} elements")
        cls = by_support.get(supp)
        if cls is None:
            cls = by_support[supp] = SimpleClass("twelve", supp, (i, g))
            classes.append(cls)
        cls.members.append((i, g))
    n, k = ctx.group.size, len(ctx.kernel)
    twelve = len(by_support)
    if twelve * 2 != n - k:
        raise ClassificationError(f"{twelve} twelve-dimensional classes, expected {(n - k) // 2}")
    ctx.__dict__["_classes"] = classes
    return classes


def simple_of_class(ctx: AlgebraContext, cls: SimpleClass) -> Module:
    if cls.kind == "one":
        return one_dimensional(ctx, cls.rep[0])
    cache = ctx.__dict__.setdefault("_simple_cache", {})
    key = cls.rep
    if key not in cache:
        cache[key] = simple_module(ctx, *key)
    return cache[key]


# -- decomposition ---------------------------------------------------------------

@dataclass
class Decomposition:
    multiplicities: dict  # SimpleClass label -> multiplicity
    classes: dict  # label -> SimpleClass
    residual: Module
    residual_indices: list[int]

    @property
    def twelve_dim_total(self) -> int:
        return 12 * sum(self.multiplicities.values())


def idempotent_rank(ctx: AlgebraContext, e: AlgebraElem, M: Module, g: int) -> int:
    return rank(M.apply_elem(e, {j: Fraction(1)}) for j in M.weight_space(g))


def decompose(ctx: AlgebraContext, M: Module) -> Decomposition:
    rel = M.check_relations(ctx)
    if not rel:
        raise ValueError(f"not a module: {rel.first_failure().name}")
    mult = {}
    classes = {}
    for cls in classify_simples(ctx):
        if cls.kind != "twelve":
            continue
        i, g = cls.rep
        if g not in M.support:
            continue
        d = idempotent_rank(ctx, _closed_form(ctx, g)[i - 1], M, g)
        if d:
            lab = cls.label(ctx)
            mult[lab] = d
            classes[lab] = cls
    keep = [j for j, w in enumerate(M.weights) if ctx.in_kernel(w)]
    N = M.restrict(keep)
    if 12 * sum(mult.values()) + N.dim != M.dim:
        raise ArithmeticError("decomposition does not account for the dimension")
    return Decomposition(mult, classes, N, keep)


# -- radical, top, socle ----------------------------------------------------------

def radical_component(ctx: AlgebraContext, g: int) -> list[dict]:
    """rad(A) delta_g as B-coordinate vectors: the a in A delta_g killing
    S[g] for every simple S."""
    cache = ctx.__dict__.setdefault("_rad_cache", {})
    if g in cache:
        return cache[g]
    words = ctx.words
    rows: list[dict] = []
    for cls in classify_simples(ctx):
        if g not in cls.support:
            continue
        S = simple_of_class(ctx, cls)
        for j in S.weight_space(g):
            images: dict = {}
            for n, b in enumerate(words):
                for k, c in S.apply_word(b, {j: Fraction(1)}).items():
                    images.setdefault(k, {})[n] = c
            rows.extend(images.values())
    sol = nullspace(rows, list(range(len(words))))
    cache[g] = sol
    return sol


@dataclass
class RadicalData:
    rad: list[dict]
    socle: list[dict]
    module: Module

    @property
    def top_dim(self) -> int:
        return self.module.dim - len(self.rad)

    def _weights(self, vecs) -> list[int]:
        return sorted(self.module.weights[next(iter(v))] for v in vecs)

    @property
    def socle_weights(self) -> list[int]:
        return self._weights(self.socle)

    @property
    def top_weights(self) -> list[int]:
        """Weights of M / rad M, counted with multiplicity."""
        total = Counter(self.module.weights)
        total.subtract(Counter(self.module.weights[next(iter(v))] for v in self.rad))
        return sorted(w for w, n in total.items() for _ in range(n))


def _elem_from_coords(ctx: AlgebraContext, coords: dict, g: int) -> AlgebraElem:
    return AlgebraElem(ctx, {(ctx.words[n], g): c for n, c in coords.items()})


def radical_top_socle(ctx: AlgebraContext, M: Module) -> RadicalData:
    rad_spaces: dict[int, Echelon] = {}
    rad: list[dict] = []
    socle: list[dict] = []
    for g in sorted(M.support):
        R = [_elem_from_coords(ctx, v, g) for v in radical_component(ctx, g)]
        space = M.weight_space(g)
        # rad M gets a . M[g]; soc M[g] is the common kernel
        cond_rows: dict = {}
        for a_n, a in enumerate(R):
            for j in space:
                img = M.apply_elem(a, {j: Fraction(1)})
                if img:
                    w = M.weights[next(iter(img))]
                    ech = rad_spaces.setdefault(w, Echelon(track=False))
                    if ech.add(img):
                        rad.append(img)
                for k, c in img.items():
                    cond_rows.setdefault((a_n, k), {})[j] = c
        for v in nullspace(cond_rows.values(), space):
            socle.append(v)
    return RadicalData(rad, socle, M)


# -- extensions ---------------------------------------------------------------------

def ext_module(ctx: AlgebraContext, g: int, h: int) -> Module | None:
    """M_{g,h} = k{w_h, w_g} with x_i w_h = w_g when g = g_i^-1 h."""
    if not (ctx.in_kernel(g) and ctx.in_kernel(h)):
        raise ValueError("g and h must lie in ker chi_z")
    G = ctx.group
    r = ctx.realization
    letters = [i for i in range(4) if G.mul(r.gmap_inv[i], h) == g]
    if not letters:
        return None
    (i,) = letters
    act = [[{}, {}] for _ in range(4)]
    act[i][0] = {1: Fraction(1)}
    M = Module([h, g], act, ["w_h", "w_g"])
    if not M.check_relations(ctx):
        raise ArithmeticError("M_{g,h} violates a defining relation")
    return M


def ext1_dim(ctx: AlgebraContext, g: int, h: int) -> int:
    """dim Ext^1 between k_h (quotient) and k_g (sub), via derivations.

    A module structure on k_g + k_h with k_g a submodule is a derivation
    D: A -> k with D(ab) = eps_g(a) D(b) + D(a) eps_h(b); the trivial ones
    are D(a) = eps_g(a) - eps_h(a) up to scale.  Unknowns are D on the
    generators delta_k and x_j; equations come from the presentation.
    """
    if not (ctx.in_kernel(g) and ctx.in_kernel(h)):
        raise ValueError("g and h must lie in ker chi_z")
    G = ctx.group
    r = ctx.realization
    X = lambda j: ("x", j)
    D = lambda k: ("d", k)
    unknowns = [D(k) for k in G.elements()] + [X(j) for j in range(4)]
    rows: list[dict] = []

    def eq(terms):
        row: dict = {}
        for u, c in terms:
            if c:
                row[u] = row.get(u, 0) + c
        row = {u: c for u, c in row.items() if c}
        if row:
            rows.append(row)

    # delta_k delta_l = [k = l] delta_k; pairs with k != g, l != h, k != l give 0 = 0
    pairs = {(g, l) for l in G.elements()} | {(k, h) for k in G.elements()} | {(k, k) for k in G.elements()}
    for k, l in sorted(pairs):
        eq([(D(l), int(k == g)), (D(k), int(l == h)), (D(k), -int(k == l))])
    # sum of the delta_k is 1, and D(1) = 0
    eq([(D(k), 1) for k in G.elements()])
    # delta_k x_j = x_j delta_{g_j k}; eps of x_j is 0 on both sides
    for k in G.elements():
        for j in range(4):
            eq([(X(j), int(k == g) - int(G.mul(r.gmap[j], k) == h))])
    # quadratic relations and z: every word of length >= 2 has D = 0; z - f gives D(f) = 0
    eq([(D(k), ctx.f(k)) for k in G.elements()])
    derivations = nullspace(rows, unknowns)
    inner = {D(k): int(k == g) - int(k == h) for k in G.elements()}
    inner = {u: c for u, c in inner.items() if c}
    return len(derivations) - (1 if inner else 0)


# -- spherical ----------------------------------------------------------------------

def check_spherical(ctx: AlgebraContext) -> Report:
    """Criterion on chi_G against the trace test on every simple module."""
    G = ctx.group
    chi = ctx.realization.chi
    rep = Report("spherical")
    if ctx.is_bosonization:
        domain = list(G.elements())
        simples = [([h], "one") for h in domain]
    else:
        domain = ctx.kernel
        simples = [(simple_of_class(ctx, c).weights, c.kind) for c in classify_simples(ctx)]
    criterion = all(chi(h) ** 2 == 1 for h in domain)
    trace_ok = True
    twelve_zero = True
    for supp, kind in simples:
        tr = sum((chi(w) for w in supp), Fraction(0))
        tr_inv = sum((chi(w).inverse() for w in supp), Fraction(0))
        if tr != tr_inv:
            trace_ok = False
        if kind == "twelve" and (tr != 0 or tr_inv != 0):
            twelve_zero = False
    involutory = all(chi(g) ** 2 == 1 for g in G.elements())
    rep.add("criterion and trace verdicts agree", criterion == trace_ok, {"criterion": criterion, "trace": trace_ok})
    rep.add("traces vanish on 12-dimensional simples", twelve_zero)
    rep.data.update(
        spherical=criterion and trace_ok,
        involutory_pivot=involutory,
        bosonization=ctx.is_bosonization,
        simples_checked=len(simples),
    )
    if criterion != trace_ok:
        raise ArithmeticError("criterion and trace test disagree")
    return rep
