"""Built-in Renner-Coxeter data, the rook monoid matrix model, and the data file format."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .coxeter import CoxeterGraph
from .errors import MalformedGraph, ParseError, WrongCatalog
from .renner import CrossSectionLattice, RennerData, RennerElement, RennerMonoid


def rook_data(n: int) -> RennerData:
    """Data of the rook monoid ``R_n`` of ``n x n`` partial permutation matrices.

    ``e_i`` is ``diag(1^i, 0^(n-i))`` for ``0 <= i < n``; the identity matrix is the unit.
    """
    if n < 1:
        raise ValueError("n must be positive")
    graph = CoxeterGraph.type_a(n - 1)
    labels = [f"e{i}" for i in range(n)]
    lattice = CrossSectionLattice.from_pairs(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])
    lower = [frozenset(f"s{j}" for j in range(i + 1, n)) for i in range(n)]
    upper = [frozenset(f"s{j}" for j in range(1, i)) for i in range(n)]
    return RennerData(graph, lattice, lower, upper, name=f"rook-{n}")


def group_data(graph: CoxeterGraph, name: str = "") -> RennerData:
    """The Coxeter group itself, seen as a Renner monoid with no singular part."""
    return RennerData(graph, CrossSectionLattice.from_pairs([], []), (), (), name=name)


def catalog() -> dict:
    """Named built-in data sets."""
    out = {f"rook-{n}": rook_data(n) for n in range(1, 5)}
    out["A1"] = group_data(CoxeterGraph.type_a(1), "A1")
    return out


@dataclass(frozen=True)
class RookElement:
    """An ``n x n`` 0/1 matrix with at most one 1 in each row and column."""

    n: int
    matrix: tuple

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        if len(m) != self.n or any(len(row) != self.n for row in m):
            raise ValueError("matrix has the wrong shape")
        for row in m:
            if any(x not in (0, 1) for x in row) or sum(row) > 1:
                raise ValueError("not a partial permutation matrix")
        if any(sum(m[i][j] for i in range(self.n)) > 1 for j in range(self.n)):
            raise ValueError("not a partial permutation matrix")

    def __matmul__(self, other: "RookElement") -> "RookElement":
        n = self.n
        a, b = self.matrix, other.matrix
        return RookElement(n, tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)))

    @property
    def rank(self) -> int:
        return sum(map(sum, self.matrix))

    @classmethod
    def identity(cls, n: int) -> "RookElement":
        return cls(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def idempotent(cls, n: int, i: int) -> "RookElement":
        return cls(n, tuple(tuple(int(r == c and r < i) for c in range(n)) for r in range(n)))

    @classmethod
    def transposition(cls, n: int, i: int) -> "RookElement":
        """Permutation matrix of ``s_i``, swapping ``i`` and ``i+1`` (1-based)."""
        perm = list(range(n))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return cls.from_partial_map(n, {j: perm[j] for j in range(n)})

    @classmethod
    def from_partial_map(cls, n: int, mapping: dict) -> "RookElement":
        """Matrix with a 1 at ``(mapping[j], j)``, 0-based."""
        m = [[0] * n for _ in range(n)]
        for j, i in mapping.items():
            m[i][j] = 1
        return cls(n, tuple(map(tuple, m)))


def _rook_size(m: RennerMonoid) -> int:
    n = m.data.graph.rank + 1
    if m.data != rook_data(n):
        raise WrongCatalog("monoid was not built from rook data")
    return n


def to_matrix(m: RennerMonoid, r: RennerElement) -> RookElement:
    """Image of ``r`` under the isomorphism onto partial permutation matrices."""
    n = _rook_size(m)
    g = m.group

    def perm(w):
        out = RookElement.identity(n)
        for s in g.word(w):
            out = out @ RookElement.transposition(n, s + 1)
        return out

    if r.e is None:
        return perm(r.w1)
    i = int(m.lattice.labels[r.e][1:])
    return perm(r.w1) @ RookElement.idempotent(n, i) @ perm(r.w2)


# -- data file format -----------------------------------------------------------
#
# A JSON document:
#   {"name": str, "generators": [s, ...], "edges": [[s, t, m], ...],
#    "lattice": [e, ...], "order": [[a, b], ...],          # a < b
#    "lambda_star_lower": {e: [s, ...]}, "lambda_star_upper": {e: [s, ...]}}


def to_text(data: RennerData) -> str:
    lat = data.lattice
    doc = {
        "name": data.name,
        "generators": list(data.graph.generators),
        "edges": [list(e) for e in data.graph.edge_list()],
        "lattice": list(lat.labels),
        "order": [list(p) for p in lat.hasse_pairs()],
        "lambda_star_lower": {e: sorted(data.lambda_lower[i], key=data.graph.index) for i, e in enumerate(lat.labels)},
        "lambda_star_upper": {e: sorted(data.lambda_upper[i], key=data.graph.index) for i, e in enumerate(lat.labels)},
    }
    return json.dumps(doc, indent=2) + "\n"


def _field(doc, key, kind, default=None):
    if key not in doc:
        if default is not None:
            return default
        raise ParseError(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise ParseError(f"field {key!r} must be a {kind.__name__}")
    return value


def _labels(value, where):
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ParseError(f"{where} must be a list of labels")
    return value


def from_text(text: str) -> RennerData:
    """Parse a data document; the result is not validated."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    gens = _labels(_field(doc, "generators", list), "generators")
    edges = {}
    for k, edge in enumerate(_field(doc, "edges", list, [])):
        where = f"edges[{k}]"
        if not (isinstance(edge, list) and len(edge) == 3 and isinstance(edge[2], int)):
            raise ParseError(f"{where} must be [s, t, m]")
        s, t, m = edge
        for x in (s, t):
            if x not in gens:
                raise ParseError(f"{where}: unknown generator label {x!r}")
        edges[(s, t)] = m
    try:
        graph = CoxeterGraph(tuple(gens), edges)
    except MalformedGraph as exc:
        raise ParseError(f"edges: {exc}") from None

    lattice = _labels(_field(doc, "lattice", list), "lattice")
    if len(set(lattice)) != len(lattice):
        raise ParseError("lattice: duplicate labels")
    pairs = []
    for k, pair in enumerate(_field(doc, "order", list, [])):
        where = f"order[{k}]"
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ParseError(f"{where} must be [a, b]")
        for x in pair:
            if x not in lattice:
                raise ParseError(f"{where}: unknown lattice label {x!r}")
        pairs.append(tuple(pair))

    maps = []
    for key in ("lambda_star_lower", "lambda_star_upper"):
        table = _field(doc, key, dict, {})
        for e in table:
            if e not in lattice:
                raise ParseError(f"{key}: unknown lattice label {e!r}")
        sets = []
        for e in lattice:
            members = _labels(table.get(e, []), f"{key}[{e!r}]")
            for s in members:
                if s not in gens:
                    raise ParseError(f"{key}[{e!r}]: unknown generator label {s!r}")
            sets.append(frozenset(members))
        maps.append(sets)
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("field 'name' must be a str")
    return RennerData(graph, CrossSectionLattice.from_pairs(lattice, pairs), maps[0], maps[1], name=name)


def from_file(path) -> RennerData:
    text = Path(path).read_text()
    try:
        return from_text(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None
