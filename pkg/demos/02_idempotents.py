"""
Primitive idempotents of A delta_g
==================================

For the realization over (F4 x| C6) x C4 with lambda = 1 the scalar
f(g) is 0 on ker chi_z and 2 elsewhere.  Outside the kernel the six
elements e_1^g .. e_6^g split delta_g.
"""

from tetrahopf.algebra import AlgebraContext, verify_bibj
from tetrahopf.realization import cyclic, cyclic_character, extend_realization, mk_affine_realization
from tetrahopf.repr import check_idempotents, idempotent_set

r = extend_realization(mk_affine_realization(1, 0), cyclic(4), cyclic_character(4, 1))
ctx = AlgebraContext(r, 1)
G = ctx.group
print(f"|G| = {G.size}, dim A = {ctx.dim}, |ker chi_z| = {len(ctx.kernel)}")

print(verify_bibj(ctx).to_text())

g = G.element("(0,1)*(g^1)")
print("f(g) =", ctx.f(g))
es = idempotent_set(ctx, g).members
for n, e in enumerate(es, 1):
    print(f"e_{n} =", e)
print(check_idempotents(ctx, es, ctx.delta(g)).to_text())
