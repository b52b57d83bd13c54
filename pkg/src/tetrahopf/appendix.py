"""Golden data for the twelve-dimensional simples L_i^g.

Letters are the word alphabet: 0 = x_0, 1 = x_1, 2 = x_w, 3 = x_w^2.

``VECTORS[i][k]`` is c_{k+1} of L_i^g as terms ``(sign, f-power, word)``;
each word is applied to delta_g and ``f`` stands for the scalar f(g).

``ACTIONS[i][k]`` gives x_0, x_1, x_w, x_w^2 applied to c_{k+1}: an entry
``"0"`` is zero, otherwise ``[-][f]n`` means (+/-)(f(g))c_n.

``IDEMPOTENT_ROWS[i] = (k, sign)`` records c_k = sign * f(g) * e_i^g.

``WEIGHTS[k][i-1]`` is the weight of c_{k+1} in L_i^g as an element X of
F4 x| C6, meaning weight X g.
"""

from __future__ import annotations

import re


def _vec(text: str) -> tuple[tuple[int, int, str], ...]:
    out = []
    for tok in text.split():
        m = re.fullmatch(r"([+-]?)(f?)([0-3]*|e)", tok)
        if not m:
            raise ValueError(tok)
        sign = -1 if m.group(1) == "-" else 1
        word = "" if m.group(3) == "e" else m.group(3)
        out.append((sign, 1 if m.group(2) else 0, word))
    return tuple(out)


def _act(text: str) -> tuple:
    out = []
    for tok in text.split():
        if tok == "0":
            out.append(None)
            continue
        m = re.fullmatch(r"([+-]?)(f?)(\d+)", tok)
        if not m:
            raise ValueError(tok)
        out.append((-1 if m.group(1) == "-" else 1, 1 if m.group(2) else 0, int(m.group(3))))
    return tuple(out)


# one row per basis vector: "terms | x0 x1 xw xw2"
_RAW = {
    1: """
        010201203            | 0 0 -f6 -f10
        010203               | 0 0 -5 -9
        01201203             | 0 1 f12 0
        01203                | 0 2 11 0
        0201203              | 0 7 0 -3
        0203                 | 0 8 0 -4
        10201203             | 1 0 0 -f12
        10203                | 2 0 0 11
        1201203              | 3 0 -7 0
        1203                 | 4 0 -8 0
        201203               | 5 9 0 0
        203                  | 6 10 0 0
    """,
    2: """
        01020123             | 0 0 6 -f10
        01023                | 0 0 -5 -9
        0120123              | 0 1 -12 0
        0123                 | 0 2 11 0
        020123               | 0 7 0 -3
        010201203 -023       | 0 -f8 0 f4
        1020123              | 1 0 0 -12
        1023                 | 2 0 0 11
        120123               | 3 0 -7 0
        123                  | 4 0 -8 0
        20123                | 5 9 0 0
        10201203 -23         | 6 -f10 0 0
    """,
    3: """
        0102013                      | 0 0 6 -10
        0103                         | 0 0 -5 -9
        012013                       | 0 1 12 0
        013                          | 0 2 11 0
        02013                        | 0 7 0 -3
        01201203 -f03                | 0 8 0 f4
        102013                       | 1 0 0 12
        010201203 -f103              | -f2 0 0 -f11
        12013                        | 3 0 -7 0
        01020123 -f13                | -f4 0 8 0
        2013                         | 5 9 0 0
        1201203 0120123 -f3          | -6 -10 0 0
    """,
    4: """
        01020                        | 0 0 -6 -10
        01020120                     | 0 0 -f5 -9
        0120 -0103                   | 0 1 12 0
        0120120 -0102013             | 0 2 11 0
        020                          | 0 7 0 -3
        020120                       | 0 8 0 -4
        1020                         | 1 0 0 -12
        1020120                      | 2 0 0 -11
        120 -103                     | 3 0 -7 0
        120120 -102013               | 4 0 -8 0
        01201203 -f03 f20            | 5 9 0 0
        -02013 20120                 | 6 10 0 0
    """,
    5: """
        0102                         | 0 0 -6 10
        0102012                      | 0 0 -5 9
        010201203 f012               | 0 f1 -f12 0
        012012 -010203               | 0 2 11 0
        01020120 f02                 | 0 f7 0 3
        02012 -f03                   | 0 8 0 4
        102                          | 1 0 0 12
        102012                       | 2 0 0 11
        10201203 f12                 | 3 0 -f7 0
        12012 -10203                 | 4 0 -8 0
        0201203 1020120 f2           | 5 9 0 0
        2012 -0203                   | 6 10 0 0
    """,
    6: """
        010                          | 0 0 -6 -10
        010301                       | 0 0 -5 9
        01020123 f01                 | 0 f1 12 0
        01201 -01023                 | 0 2 11 0
        -0120120 f0                  | 0 7 0 3
        0201                         | 0 8 0 -4
        -01020120 f10                | f1 0 0 12
        10201                        | 2 0 0 11
        1020120 -0102012 f1          | 3 0 -7 0
        1201 -1023                   | 4 0 -8 0
        020123 -120120 -012012 fe    | 5 9 0 0
        -010201203 f201 -f023        | f6 10 0 0
    """,
}

VECTORS: dict[int, tuple] = {}
ACTIONS: dict[int, tuple] = {}
for _i, _block in _RAW.items():
    _rows = [r for r in (line.strip() for line in _block.strip().splitlines()) if r]
    VECTORS[_i] = tuple(_vec(r.split("|")[0]) for r in _rows)
    ACTIONS[_i] = tuple(_act(r.split("|")[1]) for r in _rows)

IDEMPOTENT_ROWS = {1: (2, -1), 2: (5, 1), 3: (7, 1), 4: (10, 1), 5: (4, 1), 6: (11, 1)}

WEIGHTS = tuple(
    tuple(row.split())
    for row in """
    (0,t^3)  (w,t^4)    (0,t^5)  (w^2,t)    (w^2,t^2)  (w,t^3)
    (0,1)    (w,t)      (0,t^2)  (w^2,t^4)  (w^2,t^5)  (w,1)
    (1,t^4)  (w,t^5)    (1,1)    (0,t^2)    (0,t^3)    (w,t^4)
    (1,t)    (w,t^2)    (1,t^3)  (0,t^5)    (0,1)      (w,t)
    (1,t^5)  (0,1)      (1,t)    (w^2,t^3)  (w^2,t^4)  (0,t^5)
    (1,t^2)  (0,t^3)    (1,t^4)  (w^2,1)    (w^2,t)    (0,t^2)
    (0,t^4)  (w^2,t^5)  (0,1)    (1,t^2)    (1,t^3)    (w^2,t^4)
    (0,t)    (w^2,t^2)  (0,t^3)  (1,t^5)    (1,1)      (w^2,t)
    (w,t^5)  (w^2,1)    (w,t)    (0,t^3)    (0,t^4)    (w^2,t^5)
    (w,t^2)  (w^2,t^3)  (w,t^4)  (0,1)      (0,t)      (w^2,t^2)
    (w,1)    (0,t)      (w,t^2)  (1,t^4)    (1,t^5)    (0,1)
    (w,t^3)  (0,t^4)    (w,t^5)  (1,t)      (1,t^2)    (0,t^3)
    """.strip().splitlines()
)

# the class [1, g] listed as (i, X) with L_1^g ~ L_i^{X g}
ISO_BATCH = (
    (1, "(0,1)"), (2, "(1,t^2)"), (3, "(0,t)"), (4, "(w,t^2)"), (5, "(1,t)"), (6, "(w,1)"),
    (1, "(0,t^3)"), (2, "(1,t^5)"), (3, "(0,t^4)"), (4, "(w,t^5)"), (5, "(1,t^4)"), (6, "(w,t^3)"),
)
