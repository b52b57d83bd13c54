"""Finite groups as Cayley tables, characters, and principal YD-realizations
of the tetrahedron rack with constant cocycle -1.

A realization is the triple (action of G on F4, injective g: F4 -> G,
character chi with chi(g_i) = -1).  Groups stay small (a few hundred
elements at most), so every axiom is checked by exhaustion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import gcd

from . import rack
from .report import Report
from .scalars import Cyclotomic, parse_cyclotomic, root_of_unity


# -- groups ----------------------------------------------------------------

@dataclass(eq=False)
class FiniteGroup:
    """A finite group on elements 0..size-1 given by its Cayley table."""

    table: list[list[int]]
    labels: list[str] | None = None
    name: str = ""

    def __post_init__(self):
        n = len(self.table)
        self.size = n
        ids = [e for e in range(n) if all(self.table[e][x] == x for x in range(n))]
        if len(ids) != 1:
            raise ValueError("Cayley table has no unique left identity")
        self.id = ids[0]
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == self.id:
                    inv[a] = b
                    break
        if any(x is None for x in inv):
            raise ValueError("Cayley table has an element without inverse")
        self.inv = inv
        if self.labels is None:
            self.labels = [str(i) for i in range(n)]
        self._by_label = {normalize_label(l): i for i, l in enumerate(self.labels)}

    def __len__(self):
        return self.size

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def prod(self, *xs: int) -> int:
        acc = self.id
        for x in xs:
            acc = self.table[acc][x]
        return acc

    def conj(self, h: int, x: int) -> int:
        """h x h^-1."""
        return self.table[self.table[h][x]][self.inv[h]]

    def label(self, a: int) -> str:
        return self.labels[a]

    def element(self, label: str) -> int:
        try:
            return self._by_label[normalize_label(label)]
        except KeyError:
            raise KeyError(f"no group element labelled {label!r}") from None

    def elements(self) -> range:
        return range(self.size)

    def check_axioms(self) -> Report:
        rep = Report("group")
        n = self.size
        t = self.table
        rep.add("closure", all(len(r) == n and all(0 <= x < n for x in r) for r in t))
        witness = None
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                witness = (a, b, c)
                break
        rep.add("associativity", witness is None, witness)
        rep.add("identity", all(t[self.id][x] == x == t[x][self.id] for x in range(n)))
        rep.add("inverses", all(t[a][self.inv[a]] == self.id == t[self.inv[a]][a] for a in range(n)))
        return rep

    def generated_subgroup(self, gens) -> list[int]:
        seen = {self.id}
        frontier = [self.id]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return sorted(seen)

    def is_subgroup(self, subset) -> bool:
        s = set(subset)
        if self.id not in s:
            return False
        return all(self.table[a][b] in s for a in s for b in s) and all(self.inv[a] in s for a in s)

    def is_normal(self, subset) -> bool:
        s = set(subset)
        return all(self.conj(h, x) in s for h in range(self.size) for x in s)


def normalize_label(label: str) -> str:
    s = label.replace(" ", "").replace("ω", "w").replace("²", "^2")
    s = re.sub(r"w\^?2", "w^2", s)
    s = re.sub(r"t\^1(?!\d)", "t", s)
    s = re.sub(r",t\^0\)", ",1)", s)
    s = re.sub(r"\(g\^?\)", "(g^1)", s)
    return s


def _power_label(sym: str, s: int) -> str:
    return "1" if s == 0 else (sym if s == 1 else f"{sym}^{s}")


def semidirect_f4(n: int) -> FiniteGroup:
    """F4 x| C_n with t . i = w i (needs 3 | n); element (i, t^s) has index i*n + s."""
    if n % 3:
        raise ValueError("the action t.i = w i needs 3 | n")
    size = 4 * n
    table = [[0] * size for _ in range(size)]
    labels = []
    for i in range(4):
        for s in range(n):
            labels.append(f"({rack.NAMES[i]},{_power_label('t', s)})")
    for (i, s), (j, r) in product(product(range(4), range(n)), repeat=2):
        a = rack.add(i, rack.omega_power(s, j))
        table[i * n + s][j * n + r] = a * n + (s + r) % n
    return FiniteGroup(table, labels, name=f"F4xC{n}")


def sd_element(G: FiniteGroup, i: int, s: int) -> int:
    """Index of (i, t^s) in a group built by :func:`semidirect_f4`."""
    n = G.size // 4
    return i * n + s % n


def cyclic(n: int, sym: str = "g") -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, [f"{sym}^{j}" for j in range(n)], name=f"C{n}")


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], ["e"], name="1")


def _wrap(label: str) -> str:
    return label if label.startswith("(") and label.endswith(")") else f"({label})"


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with (a, b) at index a*|H| + b."""
    m = H.size
    size = G.size * m
    table = [[0] * size for _ in range(size)]
    for a1, b1, a2, b2 in product(range(G.size), range(m), range(G.size), range(m)):
        table[a1 * m + b1][a2 * m + b2] = G.table[a1][a2] * m + H.table[b1][b2]
    labels = [f"{_wrap(G.labels[a])}*{_wrap(H.labels[b])}" for a in range(G.size) for b in range(m)]
    return FiniteGroup(table, labels, name=f"{G.name}x{H.name}")


# -- characters ------------------------------------------------------------

@dataclass(eq=False)
class Character:
    """A multiplicative character with values in Q(zeta_order)."""

    values: list[Cyclotomic]
    order: int

    def __call__(self, g: int) -> Cyclotomic:
        return self.values[g]

    def power(self, k: int) -> "Character":
        return Character([v**k for v in self.values], self.order)

    def check(self, G: FiniteGroup) -> Report:
        rep = Report("character")
        rep.add("chi(e) = 1", self.values[G.id] == 1)
        bad = next(
            ((a, b) for a, b in product(G.elements(), repeat=2) if self.values[G.mul(a, b)] != self.values[a] * self.values[b]),
            None,
        )
        rep.add("multiplicative", bad is None, bad)
        bad_root = next((g for g in G.elements() if self.values[g] ** self.order != 1), None)
        rep.add("values are roots of unity", bad_root is None, bad_root)
        return rep


def trivial_character(G: FiniteGroup) -> Character:
    one = Cyclotomic.rational(1)
    return Character([one] * G.size, 1)


def cyclic_character(n: int, exponent: int) -> Character:
    """chi(g^j) = zeta_n^(exponent*j) on C_n."""
    return Character([root_of_unity(exponent * j, n) for j in range(n)], n)


def product_character(chi1: Character, chi2: Character, m: int) -> Character:
    """chi1 x chi2 on a direct product whose second factor has m elements."""
    order = chi1.order * chi2.order // gcd(chi1.order, chi2.order)
    vals = [
        (chi1.values[a] * chi2.values[b]).to_order(order)
        for a in range(len(chi1.values))
        for b in range(m)
    ]
    return Character(vals, order)


# -- realizations ------------------------------------------------------------

@dataclass(eq=False)
class YDRealization:
    """(dot, gmap, chi) over a finite group."""

    group: FiniteGroup
    dot: list[list[int]]  # dot[h][i] = h . i
    gmap: list[int]  # gmap[i] = g_i
    chi: Character
    description: dict = field(default_factory=dict)

    @cached_property
    def gmap_inv(self) -> list[int]:
        return [self.group.inv[g] for g in self.gmap]

    def word_weight(self, word: str) -> int:
        """g_{i1}^-1 ... g_{il}^-1 for a word in letters '0'..'3'."""
        G = self.group
        acc = G.id
        inv = self.gmap_inv
        for c in word:
            acc = G.table[acc][inv[int(c)]]
        return acc

    def chi_z(self, g: int) -> Cyclotomic:
        return self.chi(g) ** 6

    @cached_property
    def kernel_chi_z(self) -> list[int]:
        return [g for g in self.group.elements() if self.chi(g) ** 6 == 1]

    @cached_property
    def derived(self) -> list[int]:
        """G', the subgroup generated by the g_i."""
        return self.group.generated_subgroup(self.gmap)


def _dot_by_conjugation(G: FiniteGroup, gmap: list[int]) -> list[list[int]]:
    pos = {g: i for i, g in enumerate(gmap)}
    dot = []
    for h in G.elements():
        row = []
        for i in rack.F4:
            c = G.conj(h, gmap[i])
            if c not in pos:
                raise ValueError("the g_i are not closed under conjugation")
            row.append(pos[c])
        dot.append(row)
    return dot


def mk_affine_realization(m: int, k: int) -> YDRealization:
    """The (m, k)-affine realization over F4 x|_w C_{6m}: g_i = (i, t^{6k+1})."""
    if m < 1 or not 0 <= k < m:
        raise ValueError("need m >= 1 and 0 <= k < m")
    n = 6 * m
    G = semidirect_f4(n)
    gmap = [sd_element(G, i, 6 * k + 1) for i in rack.F4]
    dot = _dot_by_conjugation(G, gmap)
    chi = Character([Cyclotomic.rational((-1) ** (g % n), 2) for g in G.elements()], 2)
    return YDRealization(G, dot, gmap, chi, {"kind": "affine", "m": m, "k": k})


def extend_realization(base: YDRealization, extra: FiniteGroup, chi1: Character) -> YDRealization:
    """Realization over base.group x extra, extra acting trivially on F4."""
    if not chi1.check(extra):
        raise ValueError("chi1 is not a character of the extra factor")
    G0 = base.group
    m = extra.size
    G = direct_product(G0, extra)
    dot = [list(base.dot[a]) for a in range(G0.size) for _ in range(m)]
    gmap = [g * m + extra.id for g in base.gmap]
    chi = product_character(base.chi, chi1, m)
    desc = dict(base.description)
    desc.update({"kind": "extended", "extra": extra.name})
    return YDRealization(G, dot, gmap, chi, desc)


def validate_realization(r: YDRealization) -> Report:
    """Exhaustive check of every realization axiom; failures carry a witness."""
    G = r.group
    rep = Report("realization")
    rep.extend(G.check_axioms(), "group: ")
    rep.extend(r.chi.check(G), "character: ")
    act_bad = next((i for i in rack.F4 if r.dot[G.id][i] != i), None)
    if act_bad is None:
        act_bad = next(
            ((g, h, i) for g, h in product(G.elements(), repeat=2) for i in rack.F4
             if r.dot[G.mul(g, h)][i] != r.dot[g][r.dot[h][i]]),
            None,
        )
    rep.add("dot is a group action", act_bad is None, act_bad)
    rep.add("gmap is injective", len(set(r.gmap)) == 4, list(r.gmap))
    bad = next(
        ((h, i) for h in G.elements() for i in rack.F4 if r.gmap[r.dot[h][i]] != G.conj(h, r.gmap[i])),
        None,
    )
    rep.add("g_(h.i) = h g_i h^-1", bad is None, bad)
    bad = next(
        ((i, j) for i, j in product(rack.F4, repeat=2) if r.dot[r.gmap[i]][j] != rack.triangle(i, j)),
        None,
    )
    rep.add("g_i . j = i |> j", bad is None, bad)
    bad = next((i for i in rack.F4 if r.chi(r.gmap[i]) != -1), None)
    rep.add("chi(g_i) = -1", bad is None, bad)
    return rep


def ker_chi_z(r: YDRealization) -> list[int]:
    K = r.kernel_chi_z
    if not r.group.is_subgroup(K):
        raise AssertionError("ker chi_z is not a subgroup")
    return K


Z_SUMMANDS = ("201201", "120120", "012012")


def z_weight_is_e(r: YDRealization) -> bool:
    weights = {r.word_weight(w) for w in Z_SUMMANDS}
    if len(weights) != 1:
        raise ValueError(f"summands of z have different weights {sorted(weights)}")
    return weights.pop() == r.group.id


@dataclass
class Epimorphism:
    """G' -> F4 x| C6, g_i -> (i, t)."""

    source: YDRealization
    target: FiniteGroup
    images: dict[int, int]

    def __call__(self, g: int) -> int:
        return self.images[g]

    def label(self, g: int) -> str:
        return self.target.label(self.images[g])


class EpimorphismError(ValueError):
    pass


def epimorphism_to_F4C6(r: YDRealization) -> Epimorphism:
    G = r.group
    T = semidirect_f4(6)
    gens = [(r.gmap[i], sd_element(T, i, 1)) for i in rack.F4]
    images = {G.id: T.id}
    frontier = [G.id]
    while frontier:
        x = frontier.pop()
        for g, t in gens:
            y = G.mul(x, g)
            img = T.mul(images[x], t)
            if y in images:
                if images[y] != img:
                    raise EpimorphismError(f"not well defined at {G.label(y)}: {T.label(images[y])} vs {T.label(img)}")
            else:
                images[y] = img
                frontier.append(y)
    if len(set(images.values())) != T.size:
        raise EpimorphismError("image is a proper subgroup")
    return Epimorphism(r, T, images)


# -- config documents --------------------------------------------------------

class ConfigError(ValueError):
    pass


def realization_from_config(doc: dict) -> YDRealization:
    """Build a realization from its JSON document (affine / extended / table)."""
    kind = doc.get("kind")
    try:
        if kind == "affine":
            return mk_affine_realization(int(doc["m"]), int(doc["k"]))
        if kind == "extended":
            base = mk_affine_realization(int(doc.get("m", 1)), int(doc.get("k", 0)))
            extra = doc.get("extra", "C1")
            mt = re.fullmatch(r"C(\d+)", str(extra))
            if not mt:
                raise ConfigError(f"unsupported extra factor {extra!r}; use C<n>")
            n = int(mt.group(1))
            return extend_realization(base, cyclic(n), cyclic_character(n, int(doc.get("chi1_exponent", 0))))
        if kind == "table":
            G = FiniteGroup([list(map(int, row)) for row in doc["cayley"]], doc.get("labels"))
            order = int(doc.get("chi_order", 2))
            chi = Character([_scalar(v, order) for v in doc["chi"]], order)
            dot = [list(map(int, row)) for row in doc["dot"]]
            return YDRealization(G, dot, [int(g) for g in doc["gmap"]], chi, {"kind": "table"})
    except KeyError as exc:
        raise ConfigError(f"missing field {exc.args[0]!r} for kind {kind!r}") from None
    raise ConfigError(f"unknown realization kind {kind!r}")


def _scalar(v, order: int) -> Cyclotomic:
    if isinstance(v, int):
        return Cyclotomic.rational(v, order)
    return parse_cyclotomic(str(v), order)
