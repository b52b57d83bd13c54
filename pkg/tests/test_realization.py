from itertools import product

import pytest

from oracles import cyclotomic_value, extended_chi, g_top_oracle, sd_inv, sd_mul
from tetrahopf.realization import (
    Character,
    ConfigError,
    FiniteGroup,
    YDRealization,
    cyclic,
    epimorphism_to_F4C6,
    ker_chi_z,
    mk_affine_realization,
    normalize_label,
    realization_from_config,
    sd_element,
    semidirect_f4,
    validate_realization,
    z_weight_is_e,
)
from tetrahopf.rewrite import M_TOP
from tetrahopf.scalars import Cyclotomic, root_of_unity


@pytest.mark.parametrize("n", [6, 12])
def test_semidirect_product_matches_formula(n):
    G = semidirect_f4(n)
    for x, y in product(product(range(4), range(n)), repeat=2):
        z = sd_mul(x, y, n)
        assert G.mul(sd_element(G, *x), sd_element(G, *y)) == sd_element(G, *z)


def test_group_axioms_and_labels():
    G = semidirect_f4(6)
    assert G.check_axioms().ok
    assert G.label(sd_element(G, 3, 2)) == "(w^2,t^2)"
    assert G.element("(ω²,t^2)") == G.element("(w2,t^2)") == sd_element(G, 3, 2)
    assert normalize_label("(0,t^1)*(g)") == "(0,t)*(g^1)"
    with pytest.raises(KeyError):
        G.element("(2,t)")


def test_semidirect_needs_three_dividing_n():
    with pytest.raises(ValueError):
        semidirect_f4(4)


def test_affine_realization_is_valid(affine):
    rep = validate_realization(affine)
    assert rep.ok, rep.to_text()
    assert affine.group.size == 24
    assert z_weight_is_e(affine)
    # chi_z = chi^6 is trivial for chi = (-1)^s
    assert len(ker_chi_z(affine)) == 24


def test_extended_realization(extended):
    rep = validate_realization(extended)
    assert rep.ok, rep.to_text()
    G = extended.group
    assert G.size == 96
    for i, s, j in product(range(4), range(6), range(4)):
        g = G.element(f"({'0 1 w w^2'.split()[i]},t^{s})*(g^{j})")
        assert abs(cyclotomic_value(extended.chi(g).c, extended.chi(g).n) - extended_chi(i, s, j)) < 1e-12


def test_kernel_of_chi_z(extended):
    K = ker_chi_z(extended)
    # oracle: chi^6 = (-1)^j, so the kernel is j even
    expected = sum(1 for i, s, j in product(range(4), range(6), range(4)) if extended_chi(i, s, j) ** 6 == 1)
    assert len(K) == expected == 48
    G = extended.group
    assert G.is_normal(K)
    assert set(extended.derived) <= set(K)


def test_g_top_weight(extended):
    G = extended.group
    i, s = g_top_oracle()
    g_top = extended.word_weight(M_TOP)
    assert G.label(g_top) == f"({i},t^{s})*(g^0)"
    assert g_top in extended.derived
    assert G.mul(g_top, g_top) == G.id


def test_epimorphism(extended):
    phi = epimorphism_to_F4C6(extended)
    assert len(phi.images) == 24 == len(extended.derived)
    T = phi.target
    for i in range(4):
        assert phi(extended.gmap[i]) == sd_element(T, i, 1)
    # g_top goes to the product of the (i, t)^-1 along m_top
    acc = (0, 0)
    for ch in M_TOP:
        acc = sd_mul(acc, sd_inv((int(ch), 1), 6), 6)
    assert phi(extended.word_weight(M_TOP)) == sd_element(T, *acc)


@pytest.mark.parametrize("m,k", [(2, 1), (3, 1), (5, 2)])
def test_z_weight_not_e_when_m_does_not_divide(m, k):
    r = mk_affine_realization(m, k)
    assert validate_realization(r).ok
    assert not z_weight_is_e(r)


@pytest.mark.parametrize("m,k", [(0, 0), (2, 2), (1, -1)])
def test_affine_parameters_checked(m, k):
    with pytest.raises(ValueError):
        mk_affine_realization(m, k)


# -- configuration documents ------------------------------------------------------


def test_config_kinds(affine, extended):
    a = realization_from_config({"kind": "affine", "m": 1, "k": 0})
    assert a.group.table == affine.group.table
    e = realization_from_config({"kind": "extended", "m": 1, "k": 0, "extra": "C4", "chi1_exponent": 1})
    assert e.group.table == extended.group.table and e.chi.values == extended.chi.values


def test_table_config_round_trip(affine):
    doc = {
        "kind": "table",
        "cayley": affine.group.table,
        "labels": affine.group.labels,
        "gmap": affine.gmap,
        "dot": affine.dot,
        "chi_order": 2,
        "chi": [int(v.c[0]) for v in affine.chi.values],
    }
    r = realization_from_config(doc)
    assert validate_realization(r).ok
    assert r.gmap == affine.gmap


@pytest.mark.parametrize(
    "doc",
    [
        {"kind": "affine", "m": 1},
        {"kind": "nope"},
        {"kind": "extended", "extra": "D4"},
    ],
)
def test_config_errors(doc):
    with pytest.raises(ConfigError):
        realization_from_config(doc)


# -- negative controls ---------------------------------------------------------


def _variant(r, **changes):
    fields = dict(group=r.group, dot=r.dot, gmap=r.gmap, chi=r.chi)
    fields.update(changes)
    return YDRealization(**fields)


def failing(rep):
    return {c.name for c in rep.failures}


def test_rejects_trivial_character(affine):
    one = Character([Cyclotomic.rational(1, 2)] * 24, 2)
    assert "chi(g_i) = -1" in failing(validate_realization(_variant(affine, chi=one)))


def test_rejects_non_injective_gmap(affine):
    gmap = [affine.gmap[0]] * 4
    assert "gmap is injective" in failing(validate_realization(_variant(affine, gmap=gmap)))


def test_rejects_wrong_action(affine):
    dot = [list(row) for row in affine.dot]
    dot[affine.gmap[0]] = [0, 1, 2, 3]
    assert "dot is a group action" in failing(validate_realization(_variant(affine, dot=dot)))


def test_rejects_non_multiplicative_character():
    G = cyclic(4)
    chi = Character([root_of_unity(j * j, 4) for j in range(4)], 4)
    assert not chi.check(G).ok


def test_rejects_bad_cayley_table():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 0], [0, 0]])
    bad = FiniteGroup([[0, 1, 2], [1, 0, 2], [2, 2, 0]])
    assert not bad.check_axioms().ok
