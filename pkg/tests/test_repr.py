from fractions import Fraction

import pytest

from tetrahopf import appendix
from tetrahopf.algebra import AlgebraContext
from tetrahopf.realization import epimorphism_to_F4C6
from tetrahopf.repr import (
    ClassificationError,
    IdempotentError,
    check_idempotents,
    check_spherical,
    classify_simples,
    decompose,
    ext1_dim,
    ext_module,
    generated_submodule,
    idempotent_rank,
    idempotent_set,
    one_dimensional,
    orthogonalize,
    radical_top_socle,
    raw_idempotents,
    simple_module,
    simple_of_class,
    tables_csv,
    verify_table,
    verma,
)

# cells of the golden tables that disagree with the computed action at g = (0,1)*(g^1);
# see the notes in the acceptance suite
KNOWN_CELL_MISMATCHES = {
    1: {("c7", "xw2")},
    2: {("c1", "xw"), ("c3", "xw"), ("c6", "x1"), ("c6", "xw"), ("c6", "xw2"), ("c7", "xw2"), ("c12", "x1"), ("c12", "xw2")},
    3: {("c1", "xw2"), ("c3", "xw"), ("c7", "xw2"), ("c10", "xw"), ("c12", "x0"), ("c12", "x1")},
    4: {("c2", "xw2"), ("c3", "xw"), ("c3", "xw2"), ("c4", "xw"), ("c5", "xw2"), ("c7", "xw2"), ("c8", "xw2"),
        ("c9", "xw"), ("c9", "xw2"), ("c11", "x0"), ("c11", "x1"), ("c11", "xw2")},
    5: {("c1", "xw"), ("c1", "xw2"), ("c2", "xw2"), ("c3", "xw"), ("c3", "xw2"), ("c4", "xw2"), ("c5", "xw2"),
        ("c6", "x1"), ("c6", "xw"), ("c6", "xw2"), ("c7", "xw2"), ("c8", "xw2"), ("c9", "xw2"), ("c10", "xw2"),
        ("c11", "xw2"), ("c12", "x0"), ("c12", "xw2")},
    6: {("c2", "xw"), ("c2", "xw2"), ("c4", "x1"), ("c5", "xw2"), ("c8", "x0"), ("c9", "x0"), ("c9", "xw2"),
        ("c11", "x1"), ("c12", "x1")},
}
KNOWN_WEIGHT_MISMATCHES = {("c6", "L5"), ("c2", "L6"), ("c9", "L6")}


@pytest.fixture(scope="module")
def tables(ctx, g_out):
    return {i: verify_table(ctx, i, g_out) for i in range(1, 7)}


# -- Verma modules ----------------------------------------------------------------


def test_verma_is_a_module(ctx, g_out):
    for g in (ctx.group.id, g_out):
        M = verma(ctx, g)
        assert M.dim == 72
        assert M.check_relations(ctx).ok


def test_verma_relations_catch_a_corrupted_matrix(ctx, g_out):
    M = verma(ctx, g_out)
    M.action[0][0] = {k: -c for k, c in M.action[0][0].items()}
    assert not M.check_relations(ctx).ok


def test_one_dimensional(ctx, g_out):
    k = one_dimensional(ctx, ctx.group.id)
    assert k.dim == 1 and k.check_relations(ctx).ok
    with pytest.raises(ValueError):
        one_dimensional(ctx, g_out)


def test_generated_submodule_of_the_top_vector(ctx):
    M = verma(ctx, ctx.group.id)
    assert generated_submodule(M, [{0: Fraction(1)}]).dim == 72


def test_module_json(ctx):
    k = one_dimensional(ctx, ctx.group.id)
    d = k.to_dict(ctx)
    assert d["weights"] == ["(0,1)*(g^0)"]
    assert d["action"]["x0"] == [["0"]]


# -- idempotents --------------------------------------------------------------------


def test_idempotents_everywhere(ctx):
    for g in ctx.group.elements():
        s = idempotent_set(ctx, g)
        assert len(s.members) == (1 if ctx.in_kernel(g) else 6)


def test_each_idempotent_has_rank_one_on_the_verma(ctx, g_out):
    M = verma(ctx, g_out)
    for e in idempotent_set(ctx, g_out).members:
        assert idempotent_rank(ctx, e, M, g_out) == 1


def test_closed_form_agrees_with_orthogonalization(ctx, g_out):
    raw = raw_idempotents(ctx, g_out)
    assert all(a * a == a for a in raw)
    assert orthogonalize(ctx, raw) == idempotent_set(ctx, g_out).members


def test_orthogonalize_rejects_non_idempotent(ctx):
    with pytest.raises(IdempotentError):
        orthogonalize(ctx, [ctx.x(0)])


def test_check_idempotents_detects_bad_sum(ctx, g_out):
    members = idempotent_set(ctx, g_out).members[:-1]
    rep = check_idempotents(ctx, members, ctx.delta(g_out))
    assert [c.name for c in rep.failures] == ["sum = delta_g"]


# -- simples ----------------------------------------------------------------------


def test_simple_modules(ctx, g_out):
    supports = []
    for i in range(1, 7):
        L = simple_module(ctx, i, g_out)
        assert L.dim == 12 and len(L.support) == 12
        assert L.check_relations(ctx).ok
        supports.append(L.support)
    assert len(set(supports)) == 6


def test_support_translates_with_g(ctx, g_out):
    G = ctx.group
    others = [g for g in ctx.group.elements() if not ctx.in_kernel(g)][:5]
    for i in range(1, 7):
        base = {G.mul(x, G.inv[g_out]) for x in simple_module(ctx, i, g_out, check=False).support}
        for g in others:
            assert {G.mul(x, G.inv[g]) for x in simple_module(ctx, i, g, check=False).support} == base


def test_simple_needs_g_outside_kernel(ctx):
    with pytest.raises(ValueError):
        simple_module(ctx, 1, ctx.group.id)


def test_classification(ctx):
    classes = classify_simples(ctx)
    ones = [c for c in classes if c.kind == "one"]
    twelves = [c for c in classes if c.kind == "twelve"]
    assert (len(ones), len(twelves)) == (48, 24)
    for c in twelves:
        assert c.rep == min(c.members)
        assert len(c.members) == 12
    assert simple_of_class(ctx, twelves[0]).dim == 12


def test_classification_of_bosonization(ctx_aff):
    classes = classify_simples(ctx_aff)
    assert len(classes) == 24 and all(c.kind == "one" for c in classes)


def test_classification_checks_counts(ctx, g_out, monkeypatch):
    import tetrahopf.repr as R

    c = AlgebraContext(ctx.realization, 1)
    good = frozenset(range(12))
    monkeypatch.setattr(R, "simple_supports", lambda cx: {(1, g_out): good})
    with pytest.raises(ClassificationError, match="twelve-dimensional classes"):
        classify_simples(c)
    monkeypatch.setattr(R, "simple_supports", lambda cx: {(1, g_out): frozenset({0, 1})})
    with pytest.raises(ClassificationError, match="2 elements"):
        classify_simples(AlgebraContext(ctx.realization, 1))


# -- decompositions, radicals, socles --------------------------------------------------


def test_decompose_verma_outside_kernel(ctx, g_out):
    d = decompose(ctx, verma(ctx, g_out))
    assert len(d.multiplicities) == 6 and set(d.multiplicities.values()) == {1}
    assert d.residual.dim == 0 and d.twelve_dim_total == 72


def test_decompose_verma_in_kernel(ctx):
    d = decompose(ctx, verma(ctx, ctx.group.id))
    assert not d.multiplicities and d.residual.dim == 72


def test_decompose_direct_sum(ctx, g_out):
    L = simple_module(ctx, 1, g_out)
    d = decompose(ctx, L.direct_sum(L))
    assert list(d.multiplicities.values()) == [2]


def test_top_and_socle_of_kernel_verma(ctx):
    G = ctx.group
    g_top = ctx.realization.word_weight(appendix.VECTORS[1][0][0][2])
    for h in (G.id, G.element("(w,t^2)*(g^2)")):
        rd = radical_top_socle(ctx, verma(ctx, h))
        assert rd.top_weights == [h] and rd.top_dim == 1
        assert rd.socle_weights == [G.mul(g_top, h)]


def test_simple_has_zero_radical(ctx, g_out):
    L = simple_module(ctx, 1, g_out)
    rd = radical_top_socle(ctx, L)
    assert not rd.rad and len(rd.socle) == 12


# -- extensions --------------------------------------------------------------------


def test_ext_between_one_dimensionals(ctx):
    G = ctx.group
    r = ctx.realization
    h = G.id
    partners = [G.mul(r.gmap_inv[i], h) for i in range(4)]
    for g in ctx.kernel:
        expected = 1 if g in partners else 0
        assert ext1_dim(ctx, g, h) == expected
        M = ext_module(ctx, g, h)
        assert (M is not None) == bool(expected)


def test_ext_rejects_elements_outside_kernel(ctx, g_out):
    with pytest.raises(ValueError):
        ext1_dim(ctx, g_out, ctx.group.id)


# -- spherical --------------------------------------------------------------------


def test_spherical(ctx, ctx_aff):
    rep = check_spherical(ctx)
    assert rep.ok and rep.data["spherical"] and not rep.data["involutory_pivot"]
    assert rep.data["simples_checked"] == 72
    rep = check_spherical(ctx_aff)
    assert rep.data["spherical"] and rep.data["bosonization"]


# -- golden tables ------------------------------------------------------------------


def test_table_transcription_shape():
    for i in range(1, 7):
        assert len(appendix.VECTORS[i]) == len(appendix.ACTIONS[i]) == 12
        assert all(len(a) == 4 for a in appendix.ACTIONS[i])
    assert len(appendix.WEIGHTS) == 12 and all(len(r) == 6 for r in appendix.WEIGHTS)
    assert len(appendix.ISO_BATCH) == 12


@pytest.mark.parametrize("i", range(1, 7))
def test_table_discrepancies_are_the_recorded_ones(tables, i):
    rep = tables[i]
    assert rep.suite == f"table {i}"
    cells = rep.data["cells"]
    assert len([c for c in cells if c[0] != "table7"]) == 48
    bad = {(c[1], c[2]) for c in cells if c[0] != "table7" and not c[5]}
    assert bad == KNOWN_CELL_MISMATCHES[i]
    assert all(c.ok for c in rep.checks if c.name.startswith("verma: "))


def test_weight_table(tables):
    weights = [c for i in range(1, 7) for c in tables[i].data["cells"] if c[0] == "table7"]
    assert len(weights) == 72
    assert {(c[1], c[2]) for c in weights if not c[5]} == KNOWN_WEIGHT_MISMATCHES


def test_weights_of_table_one_through_epimorphism(ctx, g_out):
    phi = epimorphism_to_F4C6(ctx.realization)
    for terms, want in zip(appendix.VECTORS[1], (row[0] for row in appendix.WEIGHTS)):
        (w,) = {phi.label(ctx.realization.word_weight(t[2])) for t in terms}
        assert w == want


def test_tables_csv(tables):
    text = tables_csv([tables[1]])
    lines = text.splitlines()
    assert lines[0] == "table,row,column,expected,got,pass"
    assert len(lines) == 1 + 48 + 12
    assert "table1,c7,xw2,-f(g)c12,(2)c12,false" in lines
