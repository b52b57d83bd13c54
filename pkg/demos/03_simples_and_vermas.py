"""
Simple modules, Verma modules and integrals
===========================================

Twelve-dimensional simples L_i^g are generated by e_i^g inside the Verma
module M_g.  Classes are told apart by their supports.
"""

from tetrahopf.algebra import AlgebraContext, distinguished_grouplike, left_integrals, m_top_and_gtop
from tetrahopf.realization import cyclic, cyclic_character, extend_realization, mk_affine_realization
from tetrahopf.repr import check_spherical, classify_simples, decompose, ext1_dim, radical_top_socle, verma

r = extend_realization(mk_affine_realization(1, 0), cyclic(4), cyclic_character(4, 1))
ctx = AlgebraContext(r, 1)
G = ctx.group

classes = classify_simples(ctx)
print(sum(c.kind == "one" for c in classes), "one-dimensional,", sum(c.kind == "twelve" for c in classes), "twelve-dimensional")

g = G.element("(0,t^3)*(g^1)")
d = decompose(ctx, verma(ctx, g))
print(f"M[{G.label(g)}] =", " + ".join(d.multiplicities))

h = G.id
rd = radical_top_socle(ctx, verma(ctx, h))
print(f"M[{G.label(h)}]: top {[G.label(w) for w in rd.top_weights]}, socle {[G.label(w) for w in rd.socle_weights]}")

(t,) = left_integrals(ctx)
_, g_top = m_top_and_gtop(ctx)
print("left integral:", t)
print("distinguished group-like:", G.label(distinguished_grouplike(ctx)), "g_top:", G.label(g_top))

partners = [G.label(k) for k in ctx.kernel if ext1_dim(ctx, k, h) == 1]
print(f"Ext^1(k[{G.label(h)}], k[g]) != 0 for g in", partners)

print("spherical:", check_spherical(ctx).data)
