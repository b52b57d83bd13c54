"""
Normal forms in the 72-dimensional Nichols algebra
==================================================

The relations are four squares, four three-term quadratics and z = F.
Completing them gives a twelve-rule rewriting system whose standard
words are exactly the 72 words of the row basis B.
"""

from collections import Counter

from tetrahopf.rewrite import (
    B_words,
    FreeElem,
    M_TOP,
    base_relations,
    complete,
    parse_word,
    specialize_relations,
    standard_monomials,
    word_str,
    z_element,
)

rules = complete(base_relations())
print(rules.dump())

std = standard_monomials(rules, 9)
print("standard words:", len(std), "equal to B:", set(std) == set(B_words()))
print("graded dimensions:", [n for _, n in sorted(Counter(map(len, std)).items())])

# z reduces to the central parameter F
print("NF(z) =", rules.normal_form(z_element()))

# a longer word picks up a multiple of F through the degree-6 rule
w = parse_word("xw x0 x1 xw x0 x1 x0")
print(word_str(w), "->", rules.normal_form(FreeElem.word(w)))

# at F = 0, m_top spans the integral of the Nichols algebra
rules0 = complete(specialize_relations(base_relations(), 0))
print("x_i m_top = 0:", all(not rules0.normal_form(FreeElem.word(i + M_TOP)) for i in "0123"))
