"""Verification suites: each returns a :class:`~tetrahopf.report.Report`."""

from __future__ import annotations

import logging
from fractions import Fraction

from . import appendix
from .algebra import (
    AlgebraContext,
    IntegralError,
    chi_g_functional,
    counit,
    distinguished_grouplike,
    left_integrals,
    m_top_and_gtop,
)
from .linalg import Echelon
from .realization import EpimorphismError, epimorphism_to_F4C6, validate_realization, z_weight_is_e
from .report import Report
from .repr import (
    check_idempotents,
    check_spherical,
    classify_simples,
    decompose,
    ext1_dim,
    ext_module,
    idempotent_set,
    radical_top_socle,
    simple_module,
    vector_of,
    verify_table,
    verma,
)
from .rewrite import (
    B_words,
    BasisError,
    FreeElem,
    M_TOP,
    base_relations,
    complete,
    quadratic_relations,
    specialize_relations,
    standard_monomials,
    z_element,
    z_prime,
)

log = logging.getLogger(__name__)

SUITES = ("basis", "bibj", "idempotents", "tables", "simples", "vermas", "integrals", "ext", "spherical")


def nichols_matrices(rules) -> list[dict]:
    """Left multiplication by x_i on the standard monomials of an F-free system."""
    words = standard_monomials(rules, 9)
    mats = []
    for i in "0123":
        cols = {}
        for w in words:
            col = {}
            for s, poly in rules.reduce_word(i + w).items():
                c = poly.get(0, 0)
                if any(k for k in poly if k):
                    raise ValueError("rule system still involves F")
                if c:
                    col[s] = c
            cols[w] = col
        mats.append(cols)
    return mats


def _apply_word(mats, word: str, v: dict) -> dict:
    for ch in reversed(word):
        out: dict = {}
        col = mats[int(ch)]
        for w, c in v.items():
            for s, a in col[w].items():
                out[s] = out.get(s, 0) + c * a
        v = {s: c for s, c in out.items() if c}
        if not v:
            break
    return v


def matrix_oracle(rules) -> Report:
    """The nine relations (with F = 0) as identities of 72 x 72 matrices."""
    rep = Report("matrix oracle")
    mats = nichols_matrices(rules)
    words = standard_monomials(rules, 9)
    for n, rel in enumerate(specialize_relations(base_relations(), 0), start=1):
        bad = None
        for w in words:
            acc: dict = {}
            for (word, _), c in rel.terms.items():
                for s, a in _apply_word(mats, word, {w: Fraction(1)}).items():
                    acc[s] = acc.get(s, 0) + c * a
            if any(acc.values()):
                bad = w
                break
        rep.add(f"relation {n} acts by 0", bad is None, bad)
    return rep


def suite_basis(ctx: AlgebraContext | None = None) -> Report:
    rep = Report("basis")
    rules = ctx.rules if ctx is not None else complete(base_relations())
    try:
        std = standard_monomials(rules, 9)
        rep.add("72 standard monomials", len(std) == 72, len(std))
    except BasisError as exc:
        rep.add("72 standard monomials", False, str(exc))
        return rep
    B = B_words()
    rep.add("B has 72 distinct words", len(set(B)) == 72)
    ech = Echelon(track=False)
    indep = True
    for b in B:
        nf = {w: p.get(0, 0) for w, p in rules.reduce_word(b).items()}
        indep &= ech.add({w: c for w, c in nf.items() if c})
    rep.add("B independent in normal form", indep)
    rep.add("B is the set of standard monomials", set(B) == set(std))
    rep.add("B in normal form at the top degree", max(map(len, std)) == 9 and M_TOP in std)
    quad = complete(quadratic_relations(), 12)
    rep.add("z - z' in the quadratic ideal", not quad.normal_form(z_element() - z_prime()))
    zero = complete(specialize_relations(base_relations(), 0), 12)
    bad = [
        i for i in range(4)
        if zero.normal_form(FreeElem.word(str(i) + M_TOP)) or zero.normal_form(FreeElem.word(M_TOP + str(i)))
    ]
    rep.add("m_top is an integral at F = 0", not bad, bad or None)
    rep.extend(matrix_oracle(zero), "F = 0 oracle: ")
    one = complete(specialize_relations(base_relations(), 1), 12)
    rep.add("72 standard monomials at F = 1", len(standard_monomials(one, 9)) == 72)
    return rep


def suite_idempotents(ctx: AlgebraContext, elements=None) -> Report:
    rep = Report("idempotents")
    G = ctx.group
    for g in elements if elements is not None else G.elements():
        try:
            s = idempotent_set(ctx, g, verify=False)
        except ZeroDivisionError as exc:
            rep.add(f"E[{G.label(g)}]", False, str(exc))
            continue
        sub = check_idempotents(ctx, s.members, ctx.delta(g))
        expected = 1 if ctx.in_kernel(g) else 6
        ok = sub.ok and len(s.members) == expected
        fail = sub.first_failure()
        rep.add(f"E[{G.label(g)}] has {expected} orthogonal idempotents summing to delta", ok, fail.name if fail else None)
    return rep


def outside_kernel(ctx: AlgebraContext) -> list[int]:
    return [g for g in ctx.group.elements() if not ctx.in_kernel(g)]


def suite_tables(ctx: AlgebraContext, g: int) -> tuple[Report, list[Report]]:
    rep = Report("tables")
    parts = []
    for i in range(1, 7):
        r = verify_table(ctx, i, g)
        parts.append(r)
        rep.extend(r, f"table {i}: ")
    return rep, parts


def suite_simples(ctx: AlgebraContext) -> Report:
    rep = Report("simples")
    classes = classify_simples(ctx)
    ones = [c for c in classes if c.kind == "one"]
    twelves = [c for c in classes if c.kind == "twelve"]
    n, k = ctx.group.size, len(ctx.kernel)
    rep.add("one-dimensional count = |ker chi_z|", len(ones) == k, len(ones))
    rep.add("12-dimensional count = (|G| - |ker chi_z|) / 2", 2 * len(twelves) == n - k, len(twelves))
    rep.add("each 12-dimensional class has 12 members", all(len(c.members) == 12 for c in twelves))
    rep.add("supports have 12 elements", all(len(c.support) == 12 for c in twelves))
    # projective cover of k_h is M_h (dim 72); L is its own projective cover
    total = 72 * len(ones) + 12 * 12 * len(twelves)
    rep.add("sum dim P(S) dim S = 72 |G|", total == 72 * n, total)
    if twelves:
        G = ctx.group
        g = twelves[0].rep[1]
        try:
            phi = epimorphism_to_F4C6(ctx.realization)
        except EpimorphismError:
            phi = None
        if phi is not None and len(phi.images) == 24:
            inv = {v: x for x, v in phi.images.items()}
            base = simple_module(ctx, 1, g).support
            for i, lab in appendix.ISO_BATCH:
                x = inv[phi.target.element(lab)]
                h = G.mul(x, g)
                same = simple_module(ctx, i, h).support == base
                rep.add(f"L_1^g ~ L_{i}^{{{lab} g}}", same)
    return rep


def suite_vermas(ctx: AlgebraContext) -> Report:
    rep = Report("vermas")
    G = ctx.group
    _, gtop = m_top_and_gtop(ctx)
    for h in G.elements():
        M = verma(ctx, h)
        lab = G.label(h)
        if ctx.in_kernel(h):
            start = {ctx.word_index[""]: Fraction(1)}
            ech = Echelon(track=False)
            free = all(ech.add(M.apply_word(b, start)) for b in ctx.words)
            rd = radical_top_socle(ctx, M)
            rep.add(f"M[{lab}] free of rank 1", free and M.dim == 72)
            rep.add(f"top M[{lab}] = k[{lab}]", rd.top_weights == [h], [G.label(w) for w in rd.top_weights])
            rep.add(f"soc M[{lab}] = k[g_top {lab}]", rd.socle_weights == [G.mul(gtop, h)], [G.label(w) for w in rd.socle_weights])
        else:
            d = decompose(ctx, M)
            ok = len(d.multiplicities) == 6 and set(d.multiplicities.values()) == {1} and d.residual.dim == 0
            rep.add(f"M[{lab}] = six non-isomorphic 12-dim simples", ok, d.multiplicities if not ok else None)
    return rep


def suite_integrals(ctx: AlgebraContext) -> Report:
    rep = Report("integrals")
    G = ctx.group
    _, gtop = m_top_and_gtop(ctx)
    gtop_inv = G.inv[gtop]
    try:
        (t,) = left_integrals(ctx)
        rep.add("dim of left integrals = 1", True)
    except IntegralError as exc:
        rep.add("dim of left integrals = 1", False, str(exc))
        return rep
    rep.add("left integral lies in M[g_top^-1]", t.right_weights() == {gtop_inv})
    M = verma(ctx, gtop_inv)
    soc = radical_top_socle(ctx, M).socle
    v = vector_of(ctx, t, gtop_inv)
    ech = Echelon(track=False)
    for s in soc:
        ech.add(s)
    rep.add("left integrals = soc M[g_top^-1]", len(soc) == 1 and ech.contains(v))
    gens = [ctx.x(i) for i in range(4)] + [ctx.delta(h) for h in G.elements()]
    rep.add("a t = eps(a) t on generators", all(ctx.mul(a, t) == t.scale(counit(ctx, a)) for a in gens))
    try:
        alpha = distinguished_grouplike(ctx)
        rep.add("distinguished group-like is chi_{g_top}", alpha == gtop, G.label(alpha))
    except IntegralError as exc:
        rep.add("distinguished group-like is chi_{g_top}", False, str(exc))
    bad = [G.label(h) for h in ctx.kernel if not chi_g_functional(ctx, h).is_algebra_map()]
    rep.add("chi_h is an algebra map for h in ker chi_z", not bad, bad[:5] or None)
    return rep


def suite_ext(ctx: AlgebraContext) -> Report:
    rep = Report("ext")
    G = ctx.group
    r = ctx.realization
    for h in ctx.kernel:
        ones = [g for g in ctx.kernel if ext1_dim(ctx, g, h) == 1]
        expected = sorted(G.mul(r.gmap_inv[i], h) for i in range(4))
        modules_ok = all((ext_module(ctx, g, h) is not None) == (g in ones) for g in ctx.kernel)
        rep.add(f"Ext^1(k[{G.label(h)}], -) has 4 partners g_i^-1 h", sorted(ones) == expected and modules_ok, len(ones))
    return rep


def suite_spherical(ctx: AlgebraContext) -> Report:
    rep = check_spherical(ctx)
    rep.add("spherical", rep.data["spherical"])
    return rep


def suite_realization(ctx: AlgebraContext) -> Report:
    rep = validate_realization(ctx.realization)
    rep.add("z has weight e", z_weight_is_e(ctx.realization))
    return rep
