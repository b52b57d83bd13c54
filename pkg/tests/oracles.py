"""Independent reference implementations used only by the tests.

Nothing here imports the package: each oracle recomputes a value from first
principles so that frozen constants in the tests have a second source.
"""

from __future__ import annotations

import cmath
from itertools import product

# -- F4 as F2[x]/(x^2 + x + 1), element a0 + a1*x stored as (a0, a1) ----------

F4_POLY = {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)}  # 0, 1, w, w^2 = w + 1
F4_CODE = {v: k for k, v in F4_POLY.items()}


def f4_add(a: int, b: int) -> int:
    (a0, a1), (b0, b1) = F4_POLY[a], F4_POLY[b]
    return F4_CODE[((a0 + b0) % 2, (a1 + b1) % 2)]


def f4_mul(a: int, b: int) -> int:
    (a0, a1), (b0, b1) = F4_POLY[a], F4_POLY[b]
    c0, c1, c2 = a0 * b0, a0 * b1 + a1 * b0, a1 * b1
    # x^2 = x + 1
    return F4_CODE[((c0 + c2) % 2, (c1 + c2) % 2)]


def f4_triangle(a: int, b: int) -> int:
    w = 2
    return f4_add(f4_mul(w, b), f4_mul(f4_mul(w, w), a))


# -- cyclotomic numbers as complex values ---------------------------------------

def cyclotomic_value(coeffs, n: int) -> complex:
    return sum(complex(c) * cmath.exp(2j * cmath.pi * k / n) for k, c in enumerate(coeffs))


# -- F4 x|_w C_n and the x C4 extension, by formula ----------------------------

def sd_mul(x, y, n: int):
    """(a, s)(b, r) = (a + w^s b, s + r) in F4 x|_w C_n."""
    (a, s), (b, r) = x, y
    wb = b
    for _ in range(s % 3):
        wb = f4_mul(2, wb)
    return (f4_add(a, wb), (s + r) % n)


def sd_inv(x, n: int):
    for y in product(range(4), range(n)):
        if sd_mul(x, y, n) == (0, 0):
            return y
    raise AssertionError


def extended_chi(i: int, s: int, j: int) -> complex:
    """chi((i, t^s) * g^j) = (-1)^s * i^j on (F4 x| C6) x C4."""
    return (-1) ** s * 1j**j


def g_top_oracle(n: int = 6):
    """Weight of m_top = 010201203: product of g_{i}^{-1} in word order."""
    word = "010201203"
    acc = (0, 0)
    for ch in word:
        acc = sd_mul(acc, sd_inv((int(ch), 1), n), n)
    return acc


# -- graded dimensions of T(V)/(quadratic relations), by linear algebra mod p ---

P = 1_000_003


def braiding_orbits():
    """Orbits of (a, b) -> (a |> b, a) on pairs a != b, read right to left.

    The relations of the Nichols algebra in degree 2 are the squares and one
    orbit sum per orbit; reading right to left matches the word convention of
    the package (x_i x_j is the word "ij").
    """
    seen = set()
    out = []
    for i, j in product(range(4), repeat=2):
        if i == j:
            continue
        orbit = []
        a, b = i, j
        for _ in range(3):
            orbit.append(f"{b}{a}")
            a, b = f4_triangle(a, b), a
        assert (a, b) == (i, j)
        key = frozenset(orbit)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


def _quadratic_relations():
    rels = [{(i, i): 1} for i in range(4)]
    for orbit in braiding_orbits():
        rels.append({(int(w[0]), int(w[1])): 1 for w in orbit})
    return rels


def _rank_mod_p(rows: list[dict], p: int = P) -> int:
    pivots: dict = {}
    r = 0
    for row in rows:
        v = {k: c % p for k, c in row.items() if c % p}
        while v:
            lead = min(v)
            if lead not in pivots:
                inv = pow(v[lead], p - 2, p)
                pivots[lead] = {k: c * inv % p for k, c in v.items()}
                r += 1
                break
            piv = pivots[lead]
            c = v[lead]
            for k, a in piv.items():
                nv = (v.get(k, 0) - c * a) % p
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return r


def quadratic_hilbert(max_degree: int) -> list[int]:
    """dim of the degree-d part of T(V)/(quadratic relations), d <= max_degree."""
    rels = _quadratic_relations()
    dims = [1, 4]
    for d in range(2, max_degree + 1):
        rows = []
        for pos in range(d - 1):
            for left in product(range(4), repeat=pos):
                for right in product(range(4), repeat=d - 2 - pos):
                    for rel in rels:
                        rows.append({left + pair + right: c for pair, c in rel.items()})
        dims.append(4**d - _rank_mod_p(rows))
    return dims
