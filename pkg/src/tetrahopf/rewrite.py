"""Normal forms in k<x_0, x_1, x_w, x_w2>[F] modulo the quadratic relations
and the sextic relation z = F, with F central.

Words are strings over ``"0123"`` (letters x_0, x_1, x_w, x_w^2).  A
:class:`FreeElem` keeps its terms keyed by ``(word, k)`` meaning
``coeff * F^k * word``, so the central parameter is carried exactly and
specialised only when an element is pushed into a weight component.

Completion is a degree-bounded noncommutative Buchberger procedure for the
degree-lexicographic order with x_0 < x_1 < x_w < x_w^2.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .rack import F4, add, mul
from .scalars import FPoly

log = logging.getLogger(__name__)

LETTERS = "0123"
_TOKENS = {
    "0": "0", "x0": "0", "x_0": "0",
    "1": "1", "x1": "1", "x_1": "1",
    "w": "2", "xw": "2", "x_w": "2", "2": "2",
    "w2": "3", "w^2": "3", "xw2": "3", "x_w2": "3", "xw^2": "3", "x_w^2": "3", "3": "3",
}
_LETTER_NAMES = {"0": "x0", "1": "x1", "2": "xw", "3": "xw2"}
# reverses lexicographic order on equal-length words, for the max-heap
_INVERT = str.maketrans("0123", "3210")

# rows of the basis B: a B-word is m1 m2 m3 m4 m5 with m_i from row i
B_ROWS = (
    ("", "0"),
    ("", "1", "10"),
    ("", "201"),
    ("", "2", "20"),
    ("", "3"),
)
M_TOP = "010201203"


def parse_word(text: str) -> str:
    """``"x0 x1 xw xw2"`` (or ``"0 1 w w2"``) -> ``"0123"``; blank text is the empty word."""
    text = text.strip()
    if not text:
        return ""
    out = []
    for tok in text.replace("*", " ").split():
        try:
            out.append(_TOKENS[tok])
        except KeyError:
            raise ValueError(f"unknown letter {tok!r}") from None
    return "".join(out)


def word_str(word: str) -> str:
    return " ".join(_LETTER_NAMES[c] for c in word) if word else "1"


def deglex_key(word: str):
    return (len(word), word)


class FreeElem:
    """Element of the free algebra with coefficients polynomial in F."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[str, int], object] = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = c

    @classmethod
    def word(cls, word: str, coeff=1, fdeg: int = 0) -> "FreeElem":
        return cls({(word, fdeg): Fraction(coeff) if isinstance(coeff, int) else coeff})

    @classmethod
    def parse(cls, text: str) -> "FreeElem":
        return cls.word(parse_word(text))

    @classmethod
    def F(cls, k: int = 1) -> "FreeElem":
        return cls.word("", 1, k)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def copy(self) -> "FreeElem":
        return FreeElem(self.terms)

    def _add_into(self, other: "FreeElem", scale=1):
        t = self.terms
        for key, c in other.terms.items():
            v = t.get(key, 0) + c * scale
            if v:
                t[key] = v
            else:
                t.pop(key, None)

    def __add__(self, other):
        out = self.copy()
        out._add_into(_as_free(other))
        return out

    __radd__ = __add__

    def __sub__(self, other):
        out = self.copy()
        out._add_into(_as_free(other), -1)
        return out

    def __rsub__(self, other):
        return _as_free(other) - self

    def __neg__(self):
        return FreeElem({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FreeElem):
            out: dict = {}
            for (w1, k1), c1 in self.terms.items():
                for (w2, k2), c2 in other.terms.items():
                    key = (w1 + w2, k1 + k2)
                    out[key] = out.get(key, 0) + c1 * c2
            return FreeElem(out)
        return FreeElem({k: c * other for k, c in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, FreeElem):
            return other.__mul__(self)
        return FreeElem({k: other * c for k, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FreeElem) and self.terms == other.terms

    def by_word(self) -> dict[str, FPoly]:
        """View as ``word -> FPoly``."""
        out: dict[str, dict] = {}
        for (w, k), c in self.terms.items():
            out.setdefault(w, {})[k] = c
        return {w: FPoly(d) for w, d in out.items()}

    def specialize(self, value) -> dict[str, object]:
        """``word -> coefficient`` with F replaced by ``value``."""
        out: dict[str, object] = {}
        for (w, k), c in self.terms.items():
            v = c if k == 0 else c * value**k
            s = out.get(w, 0) + v
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return out

    def at(self, value) -> "FreeElem":
        return FreeElem({(w, 0): c for w, c in self.specialize(value).items()})

    def max_degree(self) -> int:
        return max((len(w) for w, _ in self.terms), default=-1)

    def __repr__(self):
        if not self.terms:
            return "FreeElem(0)"
        parts = []
        for (w, k), c in sorted(self.terms.items(), key=lambda t: (deglex_key(t[0][0]), t[0][1])):
            f = "" if k == 0 else ("F*" if k == 1 else f"F^{k}*")
            parts.append(f"{c}*{f}{word_str(w)}")
        return "FreeElem(" + " + ".join(parts) + ")"


def _as_free(x) -> FreeElem:
    if isinstance(x, FreeElem):
        return x
    return FreeElem.word("", x)


# -- the defining relations ---------------------------------------------

def square_relations() -> list[FreeElem]:
    return [FreeElem.word(str(i) * 2) for i in F4]


def three_term_relations() -> list[FreeElem]:
    """x_j x_i + x_i x_k + x_k x_j with k = (w+1)i + w j, deduplicated (4 of them)."""
    seen = set()
    out = []
    for i, j in product(F4, repeat=2):
        if i == j:
            continue
        k = add(mul(3, i), mul(2, j))
        words = frozenset((f"{j}{i}", f"{i}{k}", f"{k}{j}"))
        if words in seen:
            continue
        seen.add(words)
        out.append(sum((FreeElem.word(w) for w in sorted(words)), FreeElem()))
    return out


def quadratic_relations() -> list[FreeElem]:
    return square_relations() + three_term_relations()


def z_element() -> FreeElem:
    """z = (x_w x_0 x_1)^2 + (x_1 x_w x_0)^2 + (x_0 x_1 x_w)^2."""
    return FreeElem.word("201201") + FreeElem.word("120120") + FreeElem.word("012012")


def z_prime() -> FreeElem:
    """(x_w x_w2 x_0)^2 + (x_1 x_w2 x_w)^2 + (x_0 x_w2 x_1)^2."""
    return FreeElem.word("230230") + FreeElem.word("132132") + FreeElem.word("031031")


def base_relations() -> list[FreeElem]:
    """4 squares, 4 three-term quadratics and z - F."""
    return quadratic_relations() + [z_element() - FreeElem.F()]


def specialize_relations(relations, value) -> list[FreeElem]:
    return [r.at(value) for r in relations]


def B_words() -> list[str]:
    """The 72 words of B in row-product order."""
    return ["".join(parts) for parts in product(*B_ROWS)]


# -- rule systems ----------------------------------------------------------

class CompletionError(ArithmeticError):
    pass


class BasisError(ArithmeticError):
    pass


def _terms_of(x: FreeElem) -> dict[str, dict[int, object]]:
    out: dict[str, dict[int, object]] = {}
    for (w, k), c in x.terms.items():
        out.setdefault(w, {})[k] = c
    return out


@dataclass
class RuleSystem:
    """Rewrite rules ``lead -> replacement`` for a fixed deglex order.

    ``rules[lead]`` is a tuple of ``(word, fdeg, coeff)`` terms, all with
    words smaller than ``lead``.
    """

    rules: dict[str, tuple[tuple[str, int, object], ...]]
    degree_bound: int | None = None
    order: str = "deglex x0<x1<xw<xw2"
    _lengths: tuple[int, ...] = field(default=(), repr=False)
    _memo: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._lengths = tuple(sorted({len(l) for l in self.rules}))

    def __len__(self):
        return len(self.rules)

    def find_lead(self, word: str):
        rules = self.rules
        for start in range(len(word)):
            for L in self._lengths:
                if start + L > len(word):
                    break
                if word[start:start + L] in rules:
                    return start, L
        return None

    def is_standard(self, word: str) -> bool:
        return self.find_lead(word) is None

    def reduce_word(self, word: str) -> dict[str, dict[int, object]]:
        """Normal form of a single word as ``word -> {fdeg: coeff}`` (memoised)."""
        memo = self._memo
        if word in memo:
            return memo[word]
        stack = [word]
        while stack:
            x = stack[-1]
            if x in memo:
                stack.pop()
                continue
            occ = self.find_lead(x)
            if occ is None:
                memo[x] = {x: {0: Fraction(1)}}
                stack.pop()
                continue
            start, L = occ
            u, v = x[:start], x[start + L:]
            rep = self.rules[x[start:start + L]]
            missing = [u + rw + v for rw, _, _ in rep if u + rw + v not in memo]
            if missing:
                stack.extend(missing)
                continue
            acc: dict[str, dict[int, object]] = {}
            for rw, rk, rc in rep:
                for w2, poly in memo[u + rw + v].items():
                    slot = acc.setdefault(w2, {})
                    for k, c in poly.items():
                        val = slot.get(k + rk, 0) + rc * c
                        if val:
                            slot[k + rk] = val
                        else:
                            slot.pop(k + rk, None)
            memo[x] = {w2: p for w2, p in acc.items() if p}
            stack.pop()
        return memo[word]

    def normal_form(self, x: FreeElem) -> FreeElem:
        out: dict = {}
        for (w, k), c in x.terms.items():
            for w2, poly in self.reduce_word(w).items():
                for k2, c2 in poly.items():
                    key = (w2, k + k2)
                    out[key] = out.get(key, 0) + c * c2
        return FreeElem(out)

    def standard_monomials(self, max_degree: int) -> list[str]:
        """All standard words of length <= max_degree, in deglex order."""
        out = [""]
        layer = [""]
        for _ in range(max_degree):
            nxt = []
            for w in layer:
                for a in LETTERS:
                    cand = w + a
                    # only suffixes can newly contain a lead
                    if not any(cand[-L:] in self.rules for L in self._lengths if L <= len(cand)):
                        nxt.append(cand)
            layer = nxt
            out.extend(layer)
            if not layer:
                break
        return sorted(out, key=deglex_key)

    def dump(self) -> str:
        lines = []
        for lead in sorted(self.rules, key=deglex_key):
            rhs = []
            for w, k, c in sorted(self.rules[lead], key=lambda t: (deglex_key(t[0]), t[1]), reverse=True):
                f = "" if k == 0 else ("F*" if k == 1 else f"F^{k}*")
                rhs.append(f"{c}*{f}{word_str(w)}")
            lines.append(f"{word_str(lead)} -> {' + '.join(rhs) if rhs else '0'}")
        return "\n".join(lines) + "\n"


def _leading(p: dict[str, dict[int, object]]):
    lead = max(p, key=deglex_key)
    coeff = p[lead]
    if len(coeff) != 1:
        raise CompletionError(f"leading coefficient of {word_str(lead)} is not a monomial in F")
    (k, c), = coeff.items()
    return lead, k, c


def _make_monic(p: dict[str, dict[int, object]]):
    lead, k, c = _leading(p)
    if k:
        # homogeneous in (length + 6 * fdeg): every term carries F^k;
        # dividing it out is legitimate because the quotient is F-torsion free
        if any(kk < k for poly in p.values() for kk in poly):
            raise CompletionError(f"cannot divide by F^{k} at {word_str(lead)}")
    tail = []
    for w, poly in p.items():
        if w == lead:
            continue
        for kk, cc in poly.items():
            tail.append((w, kk - k, -cc / c))
    return lead, tuple(tail)


def _reduce_poly(p: dict[str, dict[int, object]], rules: RuleSystem) -> dict[str, dict[int, object]]:
    """Full reduction without memoisation (the rule set is still changing)."""
    work = {w: dict(poly) for w, poly in p.items() if poly}
    heap = [(-len(w), w.translate(_INVERT), w) for w in work]
    heapq.heapify(heap)
    result: dict[str, dict[int, object]] = {}
    while heap:
        _, _, w = heapq.heappop(heap)
        coeffs = work.pop(w, None)
        if not coeffs:
            continue
        occ = rules.find_lead(w)
        if occ is None:
            result[w] = coeffs
            continue
        start, L = occ
        u, v = w[:start], w[start + L:]
        for rw, rk, rc in rules.rules[w[start:start + L]]:
            nw = u + rw + v
            slot = work.get(nw)
            if slot is None:
                slot = work[nw] = {}
                heapq.heappush(heap, (-len(nw), nw.translate(_INVERT), nw))
            for k, c in coeffs.items():
                val = slot.get(k + rk, 0) + rc * c
                if val:
                    slot[k + rk] = val
                else:
                    slot.pop(k + rk, None)
    return result


def _overlaps(a: str, b: str):
    """Words a + b[k:] where a proper suffix of a equals a proper prefix of b."""
    for k in range(1, min(len(a), len(b))):
        if a[-k:] == b[:k]:
            yield k


def complete(rules, degree_bound: int | None = 12) -> RuleSystem:
    """Complete ``rules`` (a RuleSystem or a list of FreeElem relations).

    All overlap ambiguities of length <= degree_bound are resolved; with
    ``degree_bound=None`` the procedure runs until no ambiguity is left.
    """
    if degree_bound is not None and degree_bound < 2:
        raise ValueError("degree_bound too small")
    if isinstance(rules, RuleSystem):
        pending = [
            {**{lead: {0: Fraction(1)}}, **_neg_tail(rep)} for lead, rep in rules.rules.items()
        ]
    else:
        pending = [_terms_of(r) for r in rules]
    system = RuleSystem({}, degree_bound)
    polys: dict[str, int] = {}  # lead -> rule id (stale-pair detection)
    next_id = 0
    pairs: list = []

    def insert(p):
        nonlocal next_id
        lead, tail = _make_monic(p)
        for other in [l for l in system.rules if lead in l and l != lead]:
            pending.append({**{other: {0: Fraction(1)}}, **_neg_tail(system.rules.pop(other))})
            polys.pop(other)
        system.rules[lead] = tail
        system._lengths = tuple(sorted({len(l) for l in system.rules}))
        polys[lead] = next_id
        next_id += 1
        for other in list(system.rules):
            for a, b in ((lead, other), (other, lead)):
                for k in _overlaps(a, b):
                    length = len(a) + len(b) - k
                    if degree_bound is None or length <= degree_bound:
                        heapq.heappush(pairs, (length, a, b, k, polys[a], polys[b]))

    while True:
        while pending:
            p = _reduce_poly(pending.pop(), system)
            if p:
                insert(p)
        if not pairs:
            break
        _, a, b, k, ida, idb = heapq.heappop(pairs)
        if polys.get(a) != ida or polys.get(b) != idb:
            continue
        # (a - ra) b[k:] - a[:-k] (b - rb)  =  a[:-k] rb - ra b[k:]
        s: dict[str, dict[int, object]] = {}
        for w, kk, c in system.rules[b]:
            _acc(s, a[:-k] + w, kk, c)
        for w, kk, c in system.rules[a]:
            _acc(s, w + b[k:], kk, -c)
        s = _reduce_poly(s, system)
        if s:
            insert(s)

    # inter-reduce tails
    final = RuleSystem({}, degree_bound)
    final.rules = dict(system.rules)
    final._lengths = system._lengths
    for lead in sorted(final.rules, key=deglex_key):
        tail = {}
        for w, k, c in final.rules[lead]:
            _acc(tail, w, k, c)
        tail = _reduce_poly(tail, final)
        final.rules[lead] = tuple(
            (w, k, c) for w in sorted(tail, key=deglex_key, reverse=True) for k, c in sorted(tail[w].items())
        )
    final._memo = {}
    log.debug("completion: %d rules, longest lead %d", len(final.rules), max(map(len, final.rules)))
    return final


def _acc(p, w, k, c):
    slot = p.setdefault(w, {})
    val = slot.get(k, 0) + c
    if val:
        slot[k] = val
    else:
        slot.pop(k, None)
        if not slot:
            p.pop(w)


def _neg_tail(rep):
    out: dict[str, dict[int, object]] = {}
    for w, k, c in rep:
        _acc(out, w, k, -c)
    return out


def normal_form(x: FreeElem, rules: RuleSystem) -> FreeElem:
    return rules.normal_form(x)


def standard_monomials(rules: RuleSystem, max_degree: int = 9, expected: int | None = 72) -> list[str]:
    """Standard words up to ``max_degree``; checks the count and that nothing
    of degree max_degree + 1 is standard."""
    words = rules.standard_monomials(max_degree + 1)
    if any(len(w) > max_degree for w in words):
        raise BasisError(f"standard monomials exist beyond degree {max_degree}")
    if expected is not None and len(words) != expected:
        raise BasisError(f"{len(words)} standard monomials, expected {expected}")
    return words


class BasisChange:
    """Change of basis from standard monomials to the basis B.

    The inverse matrix is computed once at F = 1.  Everything is homogeneous
    for deg x_i = 1, deg F = 6, so the entry for (B-word b, standard word s)
    carries F^((|s| - |b|) / 6); the exponent is checked, not assumed.
    """

    def __init__(self, rules: RuleSystem, words: list[str] | None = None):
        self.rules = rules
        self.words = list(words) if words is not None else B_words()
        if len(set(self.words)) != len(self.words):
            raise BasisError("B words are not distinct")
        self.index = {w: i for i, w in enumerate(self.words)}
        std = standard_monomials(rules, max(map(len, self.words)), expected=len(self.words))
        columns = {}
        for b in self.words:
            col = {}
            for s, poly in rules.reduce_word(b).items():
                v = sum(poly.values())
                if v:
                    col[s] = v
            columns[b] = col
        try:
            inv = _invert_to_B(columns, self.words, std)
        except ZeroDivisionError:
            raise BasisError("B is not a basis modulo the rules") from None
        self.inverse: dict[str, tuple[tuple[str, int, object], ...]] = {}
        for s, col in inv.items():
            entries = []
            for b, c in col.items():
                diff = len(s) - len(b)
                if diff < 0 or diff % 6:
                    raise BasisError(f"inhomogeneous basis change at {word_str(s)} / {word_str(b)}")
                entries.append((b, diff // 6, c))
            self.inverse[s] = tuple(entries)

    def is_identity(self) -> bool:
        return all(len(e) == 1 and e[0][0] == s and e[0][2] == 1 for s, e in self.inverse.items())

    def coords(self, x: FreeElem) -> dict[str, FPoly]:
        """Normal form of x expressed on B, as ``B-word -> FPoly``."""
        acc: dict[str, dict[int, object]] = {}
        for (w, k), c in self.rules.normal_form(x).terms.items():
            for b, kk, cc in self.inverse[w]:
                _acc(acc, b, k + kk, c * cc)
        return {b: FPoly(p) for b, p in acc.items() if p}

    def word_coords(self, word: str) -> dict[str, dict[int, object]]:
        """Like :meth:`coords` for a single word, as ``B-word -> {fdeg: coeff}``."""
        acc: dict[str, dict[int, object]] = {}
        for s, poly in self.rules.reduce_word(word).items():
            for k, c in poly.items():
                for b, kk, cc in self.inverse[s]:
                    _acc(acc, b, k + kk, c * cc)
        return acc


def _invert_to_B(columns, words, std):
    """columns[b] = NF(b) at F=1 over standard words; return, for each
    standard word s, its expression as a combination of B words."""
    from .linalg import Echelon

    e = Echelon()
    for b in words:
        if not e.add(columns[b]):
            raise ZeroDivisionError
    out = {}
    for s in std:
        comb = e.coordinates({s: 1})
        if comb is None:
            raise ZeroDivisionError
        out[s] = {words[i]: c for i, c in comb.items()}
    return out


def to_B_basis(x: FreeElem, rules: RuleSystem, change: BasisChange | None = None) -> dict[str, FPoly]:
    if change is None:
        change = BasisChange(rules)
    return change.coords(x)
