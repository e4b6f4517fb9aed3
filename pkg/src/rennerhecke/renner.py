"""
Generalised Renner monoids built from Renner-Coxeter data.

An element is stored as its normal decomposition ``(w1, e, w2)``: ``e`` is a
non-unit cross-section element, ``w1`` has no right descent in ``lower(e)``
and ``w2`` has no left descent in ``lower(e) | upper(e)``. Units of the monoid
(the Coxeter group) are stored with ``e = None``.

Here ``lower(e)`` is the set of generators with ``s e = e s = e`` and
``upper(e)`` the set of generators with ``s e = e s != e``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coxeter import DEFAULT_CAP, CoxeterGraph, CoxeterGroup, build_group
from .errors import CapExceeded, InvalidRennerData, NoGreatestElement, NotReduced, ParseError


@dataclass(frozen=True)
class CrossSectionLattice:
    """Finite lower semilattice of non-unit idempotent representatives.

    ``leq[a][b]`` is the order relation; ``meet[a][b]`` is the greatest lower
    bound or None when it does not exist (reported by validation).
    """

    labels: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    meet: tuple[tuple, ...]

    @classmethod
    def from_pairs(cls, labels: Sequence[str], pairs: Iterable[tuple[str, str]]) -> "CrossSectionLattice":
        """Build from ``(a, b)`` pairs meaning ``a <= b``; the closure is taken."""
        labels = tuple(labels)
        pos = {x: i for i, x in enumerate(labels)}
        n = len(labels)
        leq = [[i == j for j in range(n)] for i in range(n)]
        for a, b in pairs:
            leq[pos[a]][pos[b]] = True
        for k in range(n):
            for i in range(n):
                if leq[i][k]:
                    for j in range(n):
                        if leq[k][j]:
                            leq[i][j] = True
        meet = []
        for a in range(n):
            row = []
            for b in range(n):
                lower = [h for h in range(n) if leq[h][a] and leq[h][b]]
                top = [h for h in lower if all(leq[c][h] for c in lower)]
                row.append(top[0] if len(top) == 1 else None)
            meet.append(tuple(row))
        return cls(labels, tuple(tuple(r) for r in leq), tuple(meet))

    def __len__(self):
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown lattice element {label!r}") from None

    def hasse_pairs(self) -> list[tuple[str, str]]:
        n = len(self.labels)
        out = []
        for a in range(n):
            for b in range(n):
                if a == b or not self.leq[a][b]:
                    continue
                if any(c not in (a, b) and self.leq[a][c] and self.leq[c][b] for c in range(n)):
                    continue
                out.append((self.labels[a], self.labels[b]))
        return out

    def height(self, e: int) -> int:
        return sum(1 for h in range(len(self.labels)) if self.leq[h][e])


@dataclass(frozen=True)
class RennerData:
    """The presentation data: graph, lattice, and the two type maps.

    ``lambda_lower[i]`` lists generators acting trivially on lattice element
    ``i`` and ``lambda_upper[i]`` those commuting with it nontrivially.
    """

    graph: CoxeterGraph
    lattice: CrossSectionLattice
    lambda_lower: tuple[frozenset, ...]
    lambda_upper: tuple[frozenset, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "lambda_lower", tuple(frozenset(x) for x in self.lambda_lower))
        object.__setattr__(self, "lambda_upper", tuple(frozenset(x) for x in self.lambda_upper))

    def replace(self, **changes) -> "RennerData":
        kw = dict(graph=self.graph, lattice=self.lattice, lambda_lower=self.lambda_lower,
                  lambda_upper=self.lambda_upper, name=self.name)
        kw.update(changes)
        return RennerData(**kw)


@dataclass(frozen=True)
class Violation:
    check: str
    message: str
    witness: tuple = ()

    def __str__(self):
        return f"[{self.check}] {self.message}"


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, check, message, *witness):
        self.violations.append(Violation(check, message, tuple(witness)))

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


def validate_data(data: RennerData, cap: int = DEFAULT_CAP, group: CoxeterGroup | None = None) -> ValidationReport:
    """Check the data conditions exhaustively; CapExceeded propagates."""
    report = ValidationReport()
    gens = set(data.graph.generators)
    lat = data.lattice
    n = len(lat)
    if len(set(lat.labels)) != n:
        report.add("labels", "duplicate lattice labels")
    clash = gens & set(lat.labels)
    if clash:
        report.add("labels", f"labels used both as generator and lattice element: {sorted(clash)}")
    if len(data.lambda_lower) != n or len(data.lambda_upper) != n:
        report.add("labels", "type maps must have one entry per lattice element")
        return report
    for i in range(n):
        for which, sets in (("lambda_lower", data.lambda_lower), ("lambda_upper", data.lambda_upper)):
            unknown = sets[i] - gens
            if unknown:
                report.add("labels", f"{which}({lat.labels[i]}) names unknown generators {sorted(unknown)}", lat.labels[i])
    if not report.ok:
        return report

    for a in range(n):
        for b in range(n):
            if a != b and lat.leq[a][b] and lat.leq[b][a]:
                report.add("lattice", f"order is not antisymmetric on {lat.labels[a]}, {lat.labels[b]}", lat.labels[a], lat.labels[b])
            if lat.meet[a][b] is None:
                report.add("lattice", f"{lat.labels[a]} and {lat.labels[b]} have no meet", lat.labels[a], lat.labels[b])

    if group is None:
        group = build_group(data.graph, cap)
    idx = data.graph.index
    lower = [frozenset(idx(s) for s in x) for x in data.lambda_lower]
    upper = [frozenset(idx(s) for s in x) for x in data.lambda_upper]
    full = [lower[i] | upper[i] for i in range(n)]

    for e in range(n):
        name = lat.labels[e]
        shared = lower[e] & upper[e]
        if shared:
            report.add("a1", f"lambda_lower({name}) and lambda_upper({name}) share {_labels(group, shared)}", name)
        elif data.graph.connected(lower[e], upper[e]):
            report.add("a1", f"lambda_lower({name}) and lambda_upper({name}) are joined by an edge", name)
    for e in range(n):
        for f in range(n):
            if e == f or not lat.leq[e][f]:
                continue
            if not lower[f] <= lower[e]:
                report.add("a2", f"{lat.labels[e]} <= {lat.labels[f]} but lambda_lower({lat.labels[f]}) is not inside lambda_lower({lat.labels[e]})",
                           lat.labels[e], lat.labels[f])
            if not upper[e] <= upper[f]:
                report.add("a2", f"{lat.labels[e]} <= {lat.labels[f]} but lambda_upper({lat.labels[e]}) is not inside lambda_upper({lat.labels[f]})",
                           lat.labels[e], lat.labels[f])

    for e in range(n):
        for f in range(n):
            for w in group.reduced_elements(full[e], full[f]):
                supp = group.support(w)
                cands = [h for h in range(n) if lat.leq[h][e] and lat.leq[h][f] and supp <= full[h]]
                if not any(all(lat.leq[c][h] for c in cands) for h in cands):
                    report.add("b", f"no greatest h <= {lat.labels[e]}, {lat.labels[f]} with support({group.format(w) or '1'}) in lambda(h)",
                               lat.labels[e], lat.labels[f], group.format(w))
    return report


def _labels(group, subset):
    return sorted(group.graph.generators[s] for s in subset)


@dataclass(frozen=True)
class RennerElement:
    """Normal decomposition ``(w1, e, w2)``; ``e is None`` marks a unit ``w1``."""

    w1: int
    e: int | None
    w2: int = 0

    @classmethod
    def unit(cls, w: int) -> "RennerElement":
        return cls(w, None, 0)

    @property
    def is_unit(self) -> bool:
        return self.e is None


@dataclass(frozen=True)
class MatsumotoCase:
    """Outcome of multiplying ``r`` by one generator on one side.

    ``kind`` is ``"up"``, ``"fixed"`` or ``"down"`` by the sign of the length
    change. ``witness`` is the generator ``u`` with ``s w1 = w1 u`` (left) or
    ``w2 t = u w2`` (right) when one exists, and ``witness_type`` says which
    type map (``"lower"`` or ``"upper"``) it belongs to.
    """

    kind: str
    product: RennerElement
    delta: int
    witness: str | None = None
    witness_type: str | None = None


class RennerMonoid:
    """The monoid presented by validated Renner-Coxeter data."""

    def __init__(self, data: RennerData, cap: int = DEFAULT_CAP, validate: bool = True):
        self.data = data
        self.cap = cap
        self.group = build_group(data.graph, cap)
        if validate:
            report = validate_data(data, cap, self.group)
            if not report.ok:
                raise InvalidRennerData(report.violations)
        g = self.group
        self.lattice = data.lattice
        self.lower = [g.subset(x) for x in data.lambda_lower]
        self.upper = [g.subset(x) for x in data.lambda_upper]
        self.full = [a | b for a, b in zip(self.lower, self.upper)]
        self._heights = [self.lattice.height(e) for e in range(len(self.lattice))]
        self._meet_cache: dict = {}
        self._elements: list | None = None
        self._index: dict | None = None

    def __repr__(self):
        return f"RennerMonoid({self.data.name or 'unnamed'}, |W|={len(self.group)}, |L|={len(self.lattice)})"

    # -- generators and construction -----------------------------------------

    @property
    def identity(self) -> RennerElement:
        return RennerElement.unit(0)

    def generator_labels(self) -> list[str]:
        return list(self.data.graph.generators) + list(self.lattice.labels)

    def is_lattice_label(self, label: str) -> bool:
        return label in self.lattice.labels

    def generator(self, label: str) -> RennerElement:
        if label in self.lattice.labels:
            return RennerElement(0, self.lattice.index(label), 0)
        return RennerElement.unit(self.group.generator(label))

    def from_word(self, labels: Iterable[str]) -> RennerElement:
        r = self.identity
        for x in labels:
            r = self.multiply(r, self.generator(x))
        return r

    def is_normal(self, r: RennerElement) -> bool:
        if r.e is None:
            return r.w2 == 0
        g = self.group
        return not (g.right_descents(r.w1) & self.lower[r.e]) and not (g.left_descents(r.w2) & self.full[r.e])

    # -- core operations -------------------------------------------------------

    def normalize(self, w1: int, e: int | None, w2: int) -> RennerElement:
        """Normal decomposition of the product ``w1 * e * w2``."""
        g = self.group
        if e is None:
            return RennerElement.unit(g.multiply(w1, w2))
        x, c = g.coset_reduce(w2, self.full[e], "left")
        c_upper = g.project(c, self.upper[e])
        y, _ = g.coset_reduce(g.multiply(w1, c_upper), self.lower[e], "right")
        return RennerElement(y, e, x)

    def meet(self, e: int | None, f: int | None) -> int | None:
        if e is None:
            return f
        if f is None:
            return e
        return self.lattice.meet[e][f]

    def meet_with_witness(self, e: int, f: int, w: int, check: bool = True) -> int:
        """Greatest ``h <= e, f`` whose type contains the support of ``w``."""
        key = (e, f, w)
        if key in self._meet_cache:
            return self._meet_cache[key]
        g = self.group
        if check and not g.is_reduced_pair(w, self.full[f], self.full[e]):
            raise NotReduced(f"{g.format(w) or '1'} is not minimal in its ({self.lattice.labels[e]}, {self.lattice.labels[f]}) double coset")
        leq = self.lattice.leq
        supp = g.support(w)
        cands = [h for h in range(len(self.lattice)) if leq[h][e] and leq[h][f] and supp <= self.full[h]]
        top = [h for h in cands if all(leq[c][h] for c in cands)]
        if not top:
            raise NoGreatestElement(f"no greatest element for {self.lattice.labels[e]}, {self.lattice.labels[f]}, {g.format(w) or '1'}")
        self._meet_cache[key] = top[0]
        return top[0]

    def multiply(self, r: RennerElement, t: RennerElement) -> RennerElement:
        g = self.group
        if r.e is None and t.e is None:
            return RennerElement.unit(g.multiply(r.w1, t.w1))
        if r.e is None:
            return self.normalize(g.multiply(r.w1, t.w1), t.e, t.w2)
        if t.e is None:
            return self.normalize(r.w1, r.e, g.multiply(r.w2, t.w1))
        e, f = r.e, t.e
        a, d, b = g.double_coset_reduce(g.multiply(r.w2, t.w1), self.full[e], self.full[f])
        # the lower parts of a and b are absorbed by e and f; upper parts commute past them
        a_upper = g.project(a, self.upper[e])
        b_upper = g.project(b, self.upper[f])
        h = self.meet_with_witness(e, f, d, check=False)
        return self.normalize(g.multiply(r.w1, a_upper), h, g.multiply(b_upper, t.w2))

    def length(self, r: RennerElement) -> int:
        if r.e is None:
            return self.group.length[r.w1]
        return self.group.length[r.w1] + self.group.length[r.w2]

    def word(self, r: RennerElement) -> list[str]:
        """A minimal word: reduced word of ``w1``, then ``e``, then ``w2``."""
        g = self.group
        if r.e is None:
            return g.word_labels(r.w1)
        return g.word_labels(r.w1) + [self.lattice.labels[r.e]] + g.word_labels(r.w2)

    def is_idempotent(self, r: RennerElement) -> bool:
        return self.multiply(r, r) == r

    def inverse(self, r: RennerElement) -> RennerElement:
        """The unique ``y`` with ``r y r = r`` and ``y r y = y``."""
        g = self.group
        if r.e is None:
            return RennerElement.unit(g.inverse(r.w1))
        return self.normalize(g.inverse(r.w2), r.e, g.inverse(r.w1))

    # -- enumeration -----------------------------------------------------------

    def sort_key(self, r: RennerElement):
        if r.e is None:
            return (0, 0, 0, r.w1, 0)
        return (1, -self._heights[r.e], r.e, r.w1, r.w2)

    def normal_forms(self) -> list[RennerElement]:
        """Every admissible triple, built without using multiplication."""
        g = self.group
        out = [RennerElement.unit(w) for w in range(len(g))]
        for e in range(len(self.lattice)):
            left = [w for w in range(len(g)) if not (g.right_descents(w) & self.lower[e])]
            right = [w for w in range(len(g)) if not (g.left_descents(w) & self.full[e])]
            out.extend(RennerElement(a, e, b) for a in left for b in right)
        return sorted(out, key=self.sort_key)

    def enumerate(self, cap: int | None = None) -> list[RennerElement]:
        """All elements, as the closure of the generators under multiplication."""
        if self._elements is not None and cap is None:
            return self._elements
        cap = self.cap if cap is None else cap
        gens = [self.generator(x) for x in self.generator_labels()]
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            r = queue.popleft()
            for x in gens:
                y = self.multiply(r, x)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise CapExceeded(f"monoid has more than {cap} elements")
                    queue.append(y)
        elements = sorted(seen, key=self.sort_key)
        self._elements = elements
        self._index = {r: i for i, r in enumerate(elements)}
        return elements

    def index(self, r: RennerElement) -> int:
        if self._index is None:
            self.enumerate()
        return self._index[r]

    def idempotents(self) -> list[RennerElement]:
        return [r for r in self.enumerate() if self.is_idempotent(r)]

    def conjugate_idempotents(self) -> set:
        """The set ``{w e w^-1}`` over all units ``w`` and ``e`` in the lattice with the unit."""
        g = self.group
        out = {self.identity}
        for e in range(len(self.lattice)):
            for w in range(len(g)):
                out.add(self.normalize(w, e, g.inverse(w)))
        return out

    # -- notation ---------------------------------------------------------------

    def format(self, r: RennerElement) -> str:
        """``w1 . e . w2`` for singular elements, the word (or ``1``) for units."""
        g = self.group
        if r.e is None:
            return g.format(r.w1) or "1"
        parts = [g.format(r.w1), self.lattice.labels[r.e], g.format(r.w2)]
        return " . ".join(parts).strip()

    def _resolve(self, label: str) -> str:
        gens = self.data.graph.generators
        if label in gens or label in self.lattice.labels:
            return label
        if label == "s" and len(gens) == 1:
            return gens[0]
        raise ParseError(f"unknown label {label!r}")

    def parse(self, text: str) -> RennerElement:
        """Parse ``w1 . e . w2`` or a plain word over generators and lattice labels."""
        text = text.strip()
        if "." in text:
            parts = text.split(".")
            if len(parts) != 3:
                raise ParseError(f"expected 'w1 . e . w2', got {text!r}")
            w1 = [self._resolve(x) for x in parts[0].split()]
            mid = parts[1].split()
            w2 = [self._resolve(x) for x in parts[2].split()]
            if len(mid) != 1 or self._resolve(mid[0]) not in self.lattice.labels:
                raise ParseError(f"middle slot of {text!r} must be one lattice element")
            for x in w1 + w2:
                if x in self.lattice.labels:
                    raise ParseError(f"outer slots of {text!r} must be words in the generators")
            g = self.group
            return self.normalize(g.from_word(w1), self.lattice.index(self._resolve(mid[0])), g.from_word(w2))
        tokens = text.split()
        if tokens == ["1"]:
            return self.identity
        return self.from_word(self._resolve(x) for x in tokens)

    # -- checks ------------------------------------------------------------------

    def verify_presentation(self) -> list[str]:
        """Check every COX1, COX2, REN1, REN2, REN3 instance; returns failures."""
        g = self.group
        gens = self.data.graph.generators
        labels = self.lattice.labels
        one = self.identity
        fails = []

        def ev(word):
            return self.from_word(word)

        for s in gens:
            if ev([s, s]) != one:
                fails.append(f"COX1: {s} {s} != 1")
        for i, s in enumerate(gens):
            for j in range(i + 1, len(gens)):
                t = gens[j]
                m = self.data.graph.label(i, j)
                lhs = [s if k % 2 == 0 else t for k in range(m)]
                rhs = [t if k % 2 == 0 else s for k in range(m)]
                if ev(lhs) != ev(rhs):
                    fails.append(f"COX2: {' '.join(lhs)} != {' '.join(rhs)}")
        for e, name in enumerate(labels):
            for s in sorted(self.upper[e]):
                sl = gens[s]
                if ev([sl, name]) != ev([name, sl]):
                    fails.append(f"REN1: {sl} {name} != {name} {sl}")
            for s in sorted(self.lower[e]):
                sl = gens[s]
                eg = self.generator(name)
                if ev([sl, name]) != eg or ev([name, sl]) != eg:
                    fails.append(f"REN2: {sl} {name} = {name} {sl} = {name} fails")
        for e, en in enumerate(labels):
            for f, fn in enumerate(labels):
                for w in g.reduced_elements(self.full[e], self.full[f]):
                    h = self.meet_with_witness(e, f, w)
                    word = [en] + g.word_labels(w) + [fn]
                    if ev(word) != self.generator(labels[h]):
                        fails.append(f"REN3: {' '.join(word)} != {labels[h]}")
        return fails

    def matsumoto_case(self, r: RennerElement, x: str, side: str = "left") -> MatsumotoCase:
        """Classify ``x r`` (side ``left``) or ``r x`` (side ``right``)."""
        g = self.group
        xe = self.generator(x)
        prod = self.multiply(xe, r) if side == "left" else self.multiply(r, xe)
        delta = self.length(prod) - self.length(r)
        kind = "up" if delta > 0 else ("down" if delta < 0 else "fixed")
        if xe.e is not None or r.e is None:
            return MatsumotoCase(kind, prod, delta)
        s = xe.w1
        if side == "left":
            u = g.multiply(g.multiply(g.inverse(r.w1), s), r.w1)
        else:
            u = g.multiply(g.multiply(r.w2, s), g.inverse(r.w2))
        if g.length[u] != 1:
            return MatsumotoCase(kind, prod, delta)
        ui = g.words[u][0]
        if ui in self.lower[r.e]:
            wtype = "lower"
        elif ui in self.upper[r.e]:
            wtype = "upper"
        else:
            return MatsumotoCase(kind, prod, delta)
        return MatsumotoCase(kind, prod, delta, g.graph.generators[ui], wtype)
