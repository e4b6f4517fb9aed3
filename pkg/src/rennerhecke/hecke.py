"""
The generic Hecke algebra of a Renner monoid over ``Z[q]``.

Basis elements ``T_r`` are indexed by monoid elements. A generator ``x``
acts on the left by

    x in S, l(xr) = l(r) + 1:  T_x T_r = T_xr
    x in S, l(xr) = l(r):      T_x T_r = q T_r
    x in S, l(xr) = l(r) - 1:  T_x T_r = (q-1) T_r + q T_xr
    x a lattice element:       T_x T_r = q^(l(r) - l(xr)) T_xr

and symmetrically on the right. A product ``T_r * h`` is computed by
writing ``r`` as a minimal word and applying the letters right to left.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .poly import ONE, Q, ZERO, IntPolynomial
from .renner import RennerElement, RennerMonoid

Q_MINUS_ONE = Q - 1


class HeckeElement:
    """Finite formal sum of basis elements with nonzero polynomial coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for r, c in (terms or {}).items():
            if isinstance(c, int):
                c = IntPolynomial.const(c)
            if c:
                clean[r] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def basis(cls, r: RennerElement) -> "HeckeElement":
        return cls({r: ONE})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, r: RennerElement) -> IntPolynomial:
        return self._terms.get(r, ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self._terms)
        for r, c in other._terms.items():
            out[r] = out.get(r, ZERO) + c
        return HeckeElement(out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(IntPolynomial.const(-1))

    def scale(self, c) -> "HeckeElement":
        if isinstance(c, int):
            c = IntPolynomial.const(c)
        return HeckeElement({r: c * v for r, v in self._terms.items()})

    def __repr__(self):
        return f"HeckeElement({len(self._terms)} terms)"


def _accumulate(out: dict, r, c):
    v = out.get(r, ZERO) + c
    if v:
        out[r] = v
    else:
        out.pop(r, None)


@dataclass(frozen=True)
class StructureConstantTable:
    """Integer (or rational) structure constants ``c[i][j][k]`` over an indexed basis.

    Only nonzero entries are stored, keyed by ``(i, j, k)``.
    """

    elements: tuple
    entries: dict

    def value(self, i: int, j: int, k: int):
        return self.entries.get((i, j, k), 0)


class HeckeAlgebra:
    def __init__(self, monoid: RennerMonoid):
        self.monoid = monoid
        self._left: dict = {}
        self._right: dict = {}
        self._basis_products: dict = {}
        self._words: dict = {}

    # -- generator actions -------------------------------------------------------

    def _word(self, r: RennerElement) -> list[str]:
        if r not in self._words:
            self._words[r] = self.monoid.word(r)
        return self._words[r]

    def _gen_action(self, x: str, r: RennerElement, side: str) -> dict:
        cache = self._left if side == "left" else self._right
        key = (x, r)
        if key in cache:
            return cache[key]
        m = self.monoid
        g = m.generator(x)
        xr = m.multiply(g, r) if side == "left" else m.multiply(r, g)
        lr, lxr = m.length(r), m.length(xr)
        if g.e is not None:
            out = {xr: IntPolynomial.monomial(lr - lxr)}
        elif lxr == lr + 1:
            out = {xr: ONE}
        elif lxr == lr:
            out = {r: Q}
        else:
            out = {r: Q_MINUS_ONE, xr: Q}
        cache[key] = out
        return out

    def left_mul_generator(self, x: str, h: HeckeElement) -> HeckeElement:
        """``T_x * h`` for ``x`` a Coxeter generator or lattice label."""
        out: dict = {}
        for r, c in h.items():
            for t, v in self._gen_action(x, r, "left").items():
                _accumulate(out, t, c * v)
        return HeckeElement(out)

    def right_mul_generator(self, h: HeckeElement, x: str) -> HeckeElement:
        """``h * T_x``."""
        out: dict = {}
        for r, c in h.items():
            for t, v in self._gen_action(x, r, "right").items():
                _accumulate(out, t, c * v)
        return HeckeElement(out)

    # -- products ----------------------------------------------------------------

    def basis(self, r: RennerElement) -> HeckeElement:
        return HeckeElement.basis(r)

    def generator(self, x: str) -> HeckeElement:
        return HeckeElement.basis(self.monoid.generator(x))

    @property
    def one(self) -> HeckeElement:
        return HeckeElement.basis(self.monoid.identity)

    def word_product(self, word: Iterable[str], h: HeckeElement | None = None) -> HeckeElement:
        """``T_x1 ... T_xk * h`` (``h`` defaults to ``T_1``)."""
        h = self.one if h is None else h
        for x in reversed(list(word)):
            h = self.left_mul_generator(x, h)
        return h

    def basis_product(self, r: RennerElement, t: RennerElement) -> HeckeElement:
        key = (r, t)
        if key not in self._basis_products:
            self._basis_products[key] = self.word_product(self._word(r), HeckeElement.basis(t))
        return self._basis_products[key]

    def multiply(self, h1: HeckeElement, h2: HeckeElement) -> HeckeElement:
        out: dict = {}
        for r, c in h1.items():
            for t, d in h2.items():
                for u, v in self.basis_product(r, t).items():
                    _accumulate(out, u, c * d * v)
        return HeckeElement(out)

    def multiply_right(self, h1: HeckeElement, h2: HeckeElement) -> HeckeElement:
        """The same product, folding ``h2``'s minimal words left to right onto ``h1``."""
        total = HeckeElement()
        for t, d in h2.items():
            acc = h1
            for x in self._word(t):
                acc = self.right_mul_generator(acc, x)
            total = total + acc.scale(d)
        return total

    # -- checks ------------------------------------------------------------------

    def verify_hecke_presentation(self) -> list[str]:
        """Check every HEC1 to HEC5 instance; returns failure descriptions.

        HEC1 is checked as ``T_s^2 = (q-1) T_s + q T_1``.
        """
        m = self.monoid
        g = m.group
        gens = m.data.graph.generators
        labels = m.lattice.labels
        T = self.generator
        fails = []

        def prod(*word):
            return self.word_product(word)

        for s in gens:
            expected = T(s).scale(Q_MINUS_ONE) + self.one.scale(Q)
            if prod(s, s) != expected:
                fails.append(f"HEC1: T_{s}^2 != (q-1)T_{s} + qT_1")
        for i, s in enumerate(gens):
            for j in range(i + 1, len(gens)):
                t = gens[j]
                k = m.data.graph.label(i, j)
                lhs = [s if a % 2 == 0 else t for a in range(k)]
                rhs = [t if a % 2 == 0 else s for a in range(k)]
                if prod(*lhs) != prod(*rhs):
                    fails.append(f"HEC2: {' '.join(lhs)} != {' '.join(rhs)}")
        for e, name in enumerate(labels):
            for s in sorted(m.upper[e]):
                if prod(gens[s], name) != prod(name, gens[s]):
                    fails.append(f"HEC3: T_{gens[s]} T_{name} != T_{name} T_{gens[s]}")
            for s in sorted(m.lower[e]):
                qe = T(name).scale(Q)
                if prod(gens[s], name) != qe or prod(name, gens[s]) != qe:
                    fails.append(f"HEC4: T_{gens[s]} T_{name} = T_{name} T_{gens[s]} = qT_{name} fails")
        for e, en in enumerate(labels):
            for f, fn in enumerate(labels):
                for w in g.reduced_elements(m.full[e], m.full[f]):
                    h = m.meet_with_witness(e, f, w)
                    lhs = prod(en, *g.word_labels(w), fn)
                    rhs = T(labels[h]).scale(IntPolynomial.monomial(g.length[w]))
                    if lhs != rhs:
                        fails.append(f"HEC5: T_{en} T_({g.format(w) or '1'}) T_{fn} != q^{g.length[w]} T_{labels[h]}")
        return fails

    # -- tables ------------------------------------------------------------------

    def structure_constants(self) -> dict:
        """``{(i, j, k): polynomial}`` over the monoid's enumeration order."""
        m = self.monoid
        elements = m.enumerate()
        out = {}
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                for r, c in self.basis_product(a, b).items():
                    out[(i, j, m.index(r))] = c
        return out

    def specialize(self, q0: int) -> StructureConstantTable:
        entries = {}
        for key, c in self.structure_constants().items():
            v = c.eval_at(q0)
            if v:
                entries[key] = v
        return StructureConstantTable(tuple(self.monoid.enumerate()), entries)

    def format(self, h: HeckeElement) -> str:
        """Terms in element order, e.g. ``(q-1) * [s1] + q * [1]``."""
        m = self.monoid
        if not h:
            return "0"
        parts = []
        for r in sorted(h.terms, key=m.sort_key):
            c = str(h.coefficient(r))
            if any(op in c.lstrip("-") for op in "+-"):
                c = f"({c})"
            parts.append(f"{c} * [{m.format(r)}]")
        return " + ".join(parts)


def format_table(monoid: RennerMonoid, entries: dict) -> str:
    """Tab-separated ``left, right, result, coefficient`` lines, nonzero entries only.

    Entries are keyed by enumeration indices and sorted by them; coefficients
    are written with ``str`` (polynomials as ``q^2-q``, rationals as ``a/b``).
    """
    elements = monoid.enumerate()
    lines = ["# left\tright\tresult\tcoefficient"]
    for (i, j, k) in sorted(entries):
        c = entries[(i, j, k)]
        if not c:
            continue
        lines.append("\t".join([monoid.format(elements[i]), monoid.format(elements[j]), monoid.format(elements[k]), str(c)]))
    return "\n".join(lines) + "\n"


def write_table(monoid: RennerMonoid, entries: dict, path) -> None:
    Path(path).write_text(format_table(monoid, entries))
