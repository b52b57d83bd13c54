"""The tetrahedron rack Aff(F4, w): F4 with a |> b = w*b + w^2*a.

Field elements are encoded 0, 1, 2, 3 for 0, 1, w, w^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

ZERO, ONE, OMEGA, OMEGA2 = 0, 1, 2, 3
F4 = (ZERO, ONE, OMEGA, OMEGA2)
NAMES = ("0", "1", "w", "w^2")

# characteristic 2; 1 + w = w^2 etc.
ADD = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)
MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)


def add(a: int, b: int) -> int:
    return ADD[a][b]


def mul(a: int, b: int) -> int:
    return MUL[a][b]


def omega_power(s: int, a: int) -> int:
    """w^s * a."""
    for _ in range(s % 3):
        a = MUL[OMEGA][a]
    return a


def triangle(a: int, b: int, add_table=ADD, mul_table=MUL) -> int:
    return add_table[mul_table[OMEGA][b]][mul_table[OMEGA2][a]]


@dataclass
class RackReport:
    ok: bool
    triples_checked: int = 0
    failure: str | None = None
    witness: tuple | None = None
    details: dict = field(default_factory=dict)


def check_rack_axioms(op=triangle) -> RackReport:
    """Self-distributivity on all of F4^3 and bijectivity of each a |> -."""
    count = 0
    for a, b, c in product(F4, repeat=3):
        count += 1
        if op(a, op(b, c)) != op(op(a, b), op(a, c)):
            return RackReport(False, count, "self-distributivity", (a, b, c))
    perms = {}
    for a in F4:
        image = tuple(op(a, b) for b in F4)
        if sorted(image) != list(F4):
            return RackReport(False, count, "bijectivity", (a,))
        perms[a] = image
    return RackReport(True, count, details={"translations": perms})


def enveloping_relations() -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """The 16 relations g_i g_j = g_{i|>j} g_i."""
    return [((i, j), (triangle(i, j), i)) for i, j in product(F4, repeat=2)]


def translation_orbit(start: int = ZERO) -> set[int]:
    """Orbit of ``start`` under the group generated by the maps a |> -."""
    seen = {start}
    frontier = [start]
    while frontier:
        b = frontier.pop()
        for a in F4:
            c = triangle(a, b)
            if c not in seen:
                seen.add(c)
                frontier.append(c)
    return seen
