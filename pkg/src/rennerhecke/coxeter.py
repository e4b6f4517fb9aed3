"""
Finite Coxeter groups, enumerated exactly from their Coxeter graph.

Elements are integers indexing a table of canonical reduced words, the
shortlex-minimal reduced word over the declared generator order. Element 0
is the identity and indices are sorted by (length, canonical word).

Enumeration is level by level. Every element of length k+1 is ``w*s`` for
some ``w`` of length k with ``s`` not a right descent of ``w``. Two such
candidates ``(w, s)`` and ``(w', t)`` with ``s != t`` name the same element
exactly when ``w*s`` ends with the longest element of the rank-two parabolic
``W_{s,t}``; that is detected by stripping the ``{s,t}``-descents of ``w``.
No numerical representation is involved, so the result is exact for every
Coxeter graph whose group has at most ``cap`` elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import CapExceeded, MalformedGraph

DEFAULT_CAP = 20000


@dataclass(frozen=True)
class CoxeterGraph:
    """Generators in a fixed order plus the labels ``m(s, t) >= 3`` of edges.

    ``edges`` maps unordered label pairs to their label; absent pairs commute.
    """

    generators: tuple[str, ...]
    edges: dict = field(default_factory=dict)

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if len(set(gens)) != len(gens):
            raise MalformedGraph(f"duplicate generator labels in {gens}")
        for g in gens:
            if not isinstance(g, str) or not g:
                raise MalformedGraph(f"bad generator label {g!r}")
        clean = {}
        for pair, m in dict(self.edges).items():
            pair = frozenset(pair)
            if len(pair) != 2:
                raise MalformedGraph(f"self-edge or bad pair {sorted(pair)}")
            for g in pair:
                if g not in gens:
                    raise MalformedGraph(f"edge endpoint {g!r} is not a generator")
            if not isinstance(m, int) or m < 3:
                raise MalformedGraph(f"edge {sorted(pair)} has label {m!r}; labels must be integers >= 3")
            if pair in clean and clean[pair] != m:
                raise MalformedGraph(f"edge {sorted(pair)} declared twice")
            clean[pair] = m
        object.__setattr__(self, "edges", clean)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def index(self, label: str) -> int:
        try:
            return self.generators.index(label)
        except ValueError:
            raise KeyError(f"unknown generator {label!r}") from None

    def label(self, i: int, j: int) -> int:
        """Order of ``s_i s_j`` (1 on the diagonal, 2 for non-edges)."""
        if i == j:
            return 1
        pair = frozenset((self.generators[i], self.generators[j]))
        return self.edges.get(pair, 2)

    def connected(self, a: Iterable[int], b: Iterable[int]) -> bool:
        """True if some generator of ``a`` is joined by an edge to one of ``b``."""
        b = list(b)
        return any(self.label(i, j) >= 3 for i in a for j in b if i != j)

    def edge_list(self) -> list[tuple[str, str, int]]:
        out = []
        for i, j in _pairs(self.rank):
            m = self.label(i, j)
            if m >= 3:
                out.append((self.generators[i], self.generators[j], m))
        return out

    @classmethod
    def type_a(cls, rank: int, prefix: str = "s") -> "CoxeterGraph":
        gens = tuple(f"{prefix}{i}" for i in range(1, rank + 1))
        edges = {(gens[i], gens[i + 1]): 3 for i in range(rank - 1)}
        return cls(gens, edges)


def _pairs(k):
    for i in range(k):
        for j in range(i + 1, k):
            yield i, j


def _alternating(a: int, b: int, length: int) -> tuple[int, ...]:
    return tuple(a if i % 2 == 0 else b for i in range(length))


class CoxeterGroup:
    """A fully enumerated finite Coxeter group; immutable once built."""

    def __init__(self, graph: CoxeterGraph, words, right, cap):
        self.graph = graph
        self.cap = cap
        self.words: list[tuple[int, ...]] = words
        self.length: list[int] = [len(w) for w in words]
        # right_table[s][w] = w*s, left_table[s][w] = s*w
        self.right_table: list[list[int]] = [[right[w][s] for w in range(len(words))] for s in range(graph.rank)]
        self._index = {w: i for i, w in enumerate(words)}
        self.left_table = self._build_left_table()
        self._inverse = [self.from_word(reversed(w)) for w in words]

    def _build_left_table(self):
        n = len(self.words)
        table = [[0] * n for _ in range(self.graph.rank)]
        for s in range(self.graph.rank):
            row = table[s]
            row[0] = self.right_table[s][0]
            for w in range(1, n):
                word = self.words[w]
                prefix = self._index[word[:-1]]
                row[w] = self.right_table[word[-1]][row[prefix]]
        return table

    # -- basic access -------------------------------------------------------

    def __len__(self):
        return len(self.words)

    def __repr__(self):
        return f"CoxeterGroup({list(self.graph.generators)}, order={len(self)})"

    @property
    def identity(self) -> int:
        return 0

    @property
    def rank(self) -> int:
        return self.graph.rank

    def generator(self, s) -> int:
        if isinstance(s, str):
            s = self.graph.index(s)
        return self.right_table[s][0]

    def from_word(self, word: Iterable) -> int:
        w = 0
        for s in word:
            if isinstance(s, str):
                s = self.graph.index(s)
            w = self.right_table[s][w]
        return w

    def word(self, w: int) -> tuple[int, ...]:
        return self.words[w]

    def word_labels(self, w: int) -> list[str]:
        return [self.graph.generators[s] for s in self.words[w]]

    def format(self, w: int) -> str:
        return " ".join(self.word_labels(w))

    def subset(self, labels: Iterable) -> frozenset:
        """Generator subset from labels or indices."""
        out = set()
        for x in labels:
            out.add(self.graph.index(x) if isinstance(x, str) else int(x))
        return frozenset(out)

    # -- group law ----------------------------------------------------------

    def multiply(self, a: int, b: int) -> int:
        for s in self.words[b]:
            a = self.right_table[s][a]
        return a

    def inverse(self, w: int) -> int:
        return self._inverse[w]

    def right_descents(self, w: int) -> frozenset:
        lw = self.length[w]
        return frozenset(s for s in range(self.rank) if self.length[self.right_table[s][w]] < lw)

    def left_descents(self, w: int) -> frozenset:
        lw = self.length[w]
        return frozenset(s for s in range(self.rank) if self.length[self.left_table[s][w]] < lw)

    def support(self, w: int) -> frozenset:
        return frozenset(self.words[w])

    def descent_and_support(self, w: int):
        return self.left_descents(w), self.right_descents(w), self.support(w)

    def in_parabolic(self, w: int, subset: Iterable[int]) -> bool:
        return self.support(w) <= frozenset(subset)

    def parabolic_elements(self, subset: Iterable[int]) -> list[int]:
        subset = frozenset(subset)
        return [w for w in range(len(self)) if self.support(w) <= subset]

    def project(self, w: int, subset: Iterable[int]) -> int:
        """Keep only the letters of ``w`` lying in ``subset``.

        Meaningful when ``w`` lies in ``W_{I u J}`` with ``I`` and ``J``
        mutually commuting, where it returns the ``W_I`` factor.
        """
        subset = frozenset(subset)
        return self.from_word(s for s in self.words[w] if s in subset)

    # -- parabolic decompositions --------------------------------------------

    def coset_reduce(self, w: int, subset: Iterable[int], side: str = "right"):
        """Split ``w`` against the standard parabolic ``W_I``.

        ``side="right"`` returns ``(u, x)`` with ``w = u*x``, ``x`` in ``W_I``
        and ``u`` minimal in ``w W_I``; ``side="left"`` returns ``(u, x)`` with
        ``w = x*u`` and ``u`` minimal in ``W_I w``.
        """
        subset = sorted(frozenset(subset))
        if side == "right":
            table = self.right_table
        elif side == "left":
            table = self.left_table
        else:
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        u = w
        moved = True
        while moved:
            moved = False
            for s in subset:
                v = table[s][u]
                if self.length[v] < self.length[u]:
                    u = v
                    moved = True
                    break
        if side == "right":
            return u, self.multiply(self.inverse(u), w)
        return u, self.multiply(w, self.inverse(u))

    def double_coset_reduce(self, w: int, left: Iterable[int], right: Iterable[int]):
        """Return ``(w2, d, w1)`` with ``w = w2*d*w1``, ``d`` minimal in ``W_left w W_right``.

        ``w2`` lies in ``W_left`` and ``w1`` in ``W_right``; the pair is made
        unique by requiring ``d*w1`` to be minimal in its left ``W_left``-coset.
        """
        x, w2 = self.coset_reduce(w, left, "left")
        d, w1 = self.coset_reduce(x, right, "right")
        return w2, d, w1

    def is_reduced_pair(self, w: int, right: Iterable[int], left: Iterable[int]) -> bool:
        """True iff ``w`` is the minimal element of ``W_left w W_right``."""
        return not (self.left_descents(w) & frozenset(left)) and not (self.right_descents(w) & frozenset(right))

    def reduced_elements(self, left: Iterable[int], right: Iterable[int]) -> list[int]:
        left, right = frozenset(left), frozenset(right)
        return [w for w in range(len(self)) if self.is_reduced_pair(w, right, left)]

    def reduced_words(self, w: int) -> list[tuple[int, ...]]:
        """All reduced words of ``w``, sorted."""
        cache = {0: [()]}

        def walk(v):
            if v in cache:
                return cache[v]
            out = []
            for s in sorted(self.right_descents(v)):
                out.extend(p + (s,) for p in walk(self.right_table[s][v]))
            cache[v] = sorted(out)
            return cache[v]

        return walk(w)

    def longest_element(self, subset: Iterable[int] | None = None) -> int:
        elems = self.parabolic_elements(range(self.rank) if subset is None else subset)
        return max(elems, key=lambda v: self.length[v])


def build_group(graph: CoxeterGraph, cap: int = DEFAULT_CAP) -> CoxeterGroup:
    """Enumerate ``W(graph)``; raises CapExceeded beyond ``cap`` elements."""
    if cap < 1:
        raise ValueError("cap must be positive")
    k = graph.rank
    m = [[graph.label(i, j) for j in range(k)] for i in range(k)]
    words: list[tuple[int, ...]] = [()]
    right: list[list] = [[None] * k]
    descents: list[set] = [set()]
    level = [0]

    def strip(w, s, t):
        """Minimal element of ``w W_{s,t}`` and the length removed."""
        removed = 0
        while True:
            if s in descents[w]:
                w = right[w][s]
            elif t in descents[w]:
                w = right[w][t]
            else:
                return w, removed
            removed += 1

    while level:
        candidates = [(w, s) for w in level for s in range(k) if right[w][s] is None]
        parent = {c: c for c in candidates}

        def find(c):
            while parent[c] != c:
                parent[c] = parent[parent[c]]
                c = parent[c]
            return c

        for w, s in candidates:
            for t in range(k):
                if t == s:
                    continue
                u, removed = strip(w, s, t)
                if removed != m[s][t] - 1:
                    continue
                # w*s = u * longest(s,t); the same element is w'*t below
                w2 = u
                for letter in reversed(_alternating(s, t, m[s][t] - 1)):
                    w2 = right[w2][letter]
                a, b = find((w, s)), find((w2, t))
                if a != b:
                    parent[a] = b

        groups: dict = {}
        for c in candidates:
            groups.setdefault(find(c), []).append(c)
        new = []
        for members in groups.values():
            canon = min(words[w] + (s,) for w, s in members)
            new.append((canon, members))
        new.sort()
        if len(words) + len(new) > cap:
            raise CapExceeded(f"Coxeter group has more than {cap} elements")
        level = []
        for canon, members in new:
            v = len(words)
            words.append(canon)
            right.append([None] * k)
            descents.append(set())
            for w, s in members:
                right[w][s] = v
                right[v][s] = w
                descents[v].add(s)
            level.append(v)

    return CoxeterGroup(graph, words, right, cap)

