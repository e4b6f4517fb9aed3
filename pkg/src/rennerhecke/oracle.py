"""
Brute-force ground truth inside the matrix monoid ``M_n(F_p)``.

Matrices are encoded as integers: entry ``(i, j)`` is the base-``p`` digit of
weight ``p^(i*n + j)``. Products are computed in bulk with numpy integer
arithmetic. All structure constants are exact ``Fraction`` values.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .catalog import RookElement, rook_data, to_matrix
from .errors import CapExceeded, CoverFailure, NotPrime
from .hecke import HeckeAlgebra
from .renner import RennerMonoid

DEFAULT_ORACLE_CAP = 2_000_000


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def rank_mod_p(rows, p: int) -> int:
    a = [list(r) for r in rows]
    rank, ncols = 0, len(a[0]) if a else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col] % p), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        for i in range(len(a)):
            if i != rank and a[i][col] % p:
                f = a[i][col] * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


@dataclass
class FiniteMatrixMonoid:
    n: int
    p: int
    mats: np.ndarray        # shape (p^(n^2), n, n), index == code
    weights: np.ndarray     # base-p digit weights
    borel: np.ndarray       # codes of invertible upper-triangular matrices
    units: int              # number of invertible matrices

    def __len__(self):
        return len(self.mats)

    def encode(self, m) -> int:
        return int((np.asarray(m, dtype=np.int64).reshape(-1) % self.p) @ self.weights)

    def decode(self, code: int) -> np.ndarray:
        return self.mats[code]

    def products(self, xs, ys) -> np.ndarray:
        """Codes of ``mats[xs] @ mats[ys]`` elementwise (with broadcasting)."""
        prod = np.matmul(self.mats[xs], self.mats[ys]) % self.p
        return prod.reshape(prod.shape[:-2] + (-1,)) @ self.weights

    def left_products(self, x: int, ys) -> np.ndarray:
        """Codes of ``mats[x] @ mats[y]`` for every ``y`` in ``ys``."""
        prod = np.matmul(self.mats[x], self.mats[ys]) % self.p
        return prod.reshape(len(ys), -1) @ self.weights


def build_monoid(n: int, p: int, cap: int = DEFAULT_ORACLE_CAP) -> FiniteMatrixMonoid:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    size = p ** (n * n)
    if size > cap:
        raise CapExceeded(f"M_{n}(F_{p}) has {size} elements, above the cap {cap}")
    codes = np.arange(size, dtype=np.int64)
    digits = np.empty((size, n * n), dtype=np.int64)
    rest = codes.copy()
    for k in range(n * n):
        digits[:, k] = rest % p
        rest //= p
    mats = digits.reshape(size, n, n)
    weights = p ** np.arange(n * n, dtype=np.int64)
    lower = np.tril_indices(n, -1)
    diag = np.arange(n)
    upper_tri = np.all(mats[:, lower[0], lower[1]] == 0, axis=1)
    nonzero_diag = np.all(mats[:, diag, diag] != 0, axis=1)
    borel = codes[upper_tri & nonzero_diag]
    units = sum(1 for m in mats if rank_mod_p(m.tolist(), p) == n)
    return FiniteMatrixMonoid(n, p, mats, weights, borel, units)


@dataclass
class BruhatDecomposition:
    elements: list              # rook elements, in the monoid's enumeration order
    representatives: np.ndarray  # code of to_matrix(r) per element
    coset_of: np.ndarray        # coset index per matrix code
    members: list               # sorted codes per coset

    @property
    def sizes(self) -> list[int]:
        return [len(x) for x in self.members]


def _rook_monoid(n: int) -> RennerMonoid:
    return RennerMonoid(rook_data(n))


def bruhat_decompose(mm: FiniteMatrixMonoid, rook: RennerMonoid) -> BruhatDecomposition:
    elements = rook.enumerate()
    reps = np.array([mm.encode(to_matrix(rook, r).matrix) for r in elements], dtype=np.int64)
    coset_of = np.full(len(mm), -1, dtype=np.int64)
    b = mm.borel
    members = []
    for k, x in enumerate(reps):
        left = mm.products(b, np.full(len(b), x))
        codes = np.unique(mm.products(np.repeat(left, len(b)), np.tile(b, len(left))))
        if np.any(coset_of[codes] != -1):
            raise CoverFailure(f"double coset of {rook.format(elements[k])} overlaps an earlier one")
        coset_of[codes] = k
        members.append(codes)
    missing = int(np.sum(coset_of == -1))
    if missing:
        raise CoverFailure(f"{missing} matrices lie in no double coset")
    return BruhatDecomposition(list(elements), reps, coset_of, members)


def _set_product(mm, xs, ys) -> np.ndarray:
    out = [mm.left_products(int(x), ys) for x in xs]
    return np.unique(np.concatenate(out))


@dataclass
class CosetProductReport:
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def coset_product_check(mm: FiniteMatrixMonoid, rook: RennerMonoid, bd: BruhatDecomposition) -> CosetProductReport:
    """Compare ``BxB . BrB`` and ``BrB . BxB`` with the length-determined prediction."""
    report = CosetProductReport()
    index = {r: i for i, r in enumerate(bd.elements)}
    gens = rook.data.graph.generators
    labels = rook.lattice.labels

    def union(*elems):
        return np.unique(np.concatenate([bd.members[index[r]] for r in elems]))

    for r in bd.elements:
        lr = rook.length(r)
        for x in list(gens) + list(labels):
            xe = rook.generator(x)
            dx = bd.members[index[xe]]
            dr = bd.members[index[r]]
            for side in ("left", "right"):
                xr = rook.multiply(xe, r) if side == "left" else rook.multiply(r, xe)
                got = _set_product(mm, dx, dr) if side == "left" else _set_product(mm, dr, dx)
                if x in labels:
                    expect, case = union(xr), "lattice"
                else:
                    lxr = rook.length(xr)
                    if lxr > lr:
                        expect, case = union(xr), "up"
                    elif lxr == lr:
                        expect, case = union(r), "fixed"
                    else:
                        expect, case = union(xr, r), "down"
                report.checked += 1
                if not np.array_equal(got, expect):
                    shown = sorted({rook.format(bd.elements[c]) for c in bd.coset_of[got]})
                    report.failures.append(
                        f"{side} {x} on {rook.format(r)} ({case}): product meets cosets {shown}, expected "
                        f"{sorted({rook.format(bd.elements[c]) for c in bd.coset_of[expect]})}")
    return report


@dataclass
class RationalConstantTable:
    elements: list
    normalization: list         # a_r as Fractions
    pair_counts: np.ndarray     # counts[i, j, k] = #{(x, y) in D_i x D_j : xy = rep_k}
    mu: dict                    # (i, j, k) -> Fraction, nonzero only

    def value(self, i, j, k):
        return self.mu.get((i, j, k), Fraction(0))


def count_pairs(mm: FiniteMatrixMonoid, bd: BruhatDecomposition, targets=None, full: bool = False):
    """``counts[i, j, k]`` of pairs in ``D_i x D_j`` with product ``targets[k]``.

    With ``full=True`` also returns ``all_counts[i, j, z]`` for every matrix ``z``.
    """
    targets = bd.representatives if targets is None else np.asarray(targets)
    nr = len(bd.elements)
    target_of = np.full(len(mm), -1, dtype=np.int64)
    target_of[targets] = np.arange(nr)
    counts = np.zeros((nr, nr, nr), dtype=np.int64)
    all_counts = np.zeros((nr, nr, len(mm)), dtype=np.int64) if full else None
    ys = np.arange(len(mm), dtype=np.int64)
    cj = bd.coset_of
    for x in range(len(mm)):
        z = mm.left_products(x, ys)
        ci = int(bd.coset_of[x])
        k = target_of[z]
        hit = k >= 0
        np.add.at(counts[ci], (cj[hit], k[hit]), 1)
        if full:
            np.add.at(all_counts[ci], (cj, z), 1)
    return (counts, all_counts) if full else counts


def iwahori_structure_constants(mm: FiniteMatrixMonoid, rook: RennerMonoid, bd: BruhatDecomposition,
                                counts: np.ndarray | None = None) -> RationalConstantTable:
    if counts is None:
        counts = count_pairs(mm, bd)
    a = [Fraction(mm.p ** rook.length(r), size) for r, size in zip(bd.elements, bd.sizes)]
    mu = {}
    for i, j, k in zip(*np.nonzero(counts)):
        mu[(int(i), int(j), int(k))] = a[i] * a[j] / a[k] * int(counts[i, j, k])
    return RationalConstantTable(bd.elements, a, counts, mu)


def alternative_representatives(bd: BruhatDecomposition, seed: int = 0) -> np.ndarray:
    """One random member of each double coset (seeded)."""
    rng = random.Random(seed)
    return np.array([int(rng.choice(list(m))) for m in bd.members], dtype=np.int64)


def convolve(mm: FiniteMatrixMonoid, f: dict, g: dict) -> dict:
    """Convolution ``(f*g)(z) = sum over xy = z of f(x) g(y)`` of finitely supported functions."""
    out: dict = {}
    ys = np.array(sorted(g), dtype=np.int64)
    gv = [g[int(y)] for y in ys]
    for x, fx in f.items():
        for z, gy in zip(mm.left_products(int(x), ys).tolist(), gv):
            out[z] = out.get(z, 0) + fx * gy
    return {z: v for z, v in out.items() if v}


def epsilon(mm: FiniteMatrixMonoid) -> dict:
    w = Fraction(1, len(mm.borel))
    return {int(b): w for b in mm.borel}


@dataclass
class ComparisonReport:
    n: int
    p: int
    total: int
    matches: int
    non_integer: list
    mismatches: list
    sizes: list

    @property
    def ok(self) -> bool:
        return not self.non_integer and not self.mismatches

    def summary(self) -> str:
        line = f"M_{self.n}(F_{self.p}): {self.matches}/{self.total} entries match"
        if self.non_integer:
            line += f"; {len(self.non_integer)} non-integral constants, first {self.non_integer[0]}"
        if self.mismatches:
            line += f"; first mismatch {self.mismatches[0]}"
        return line


def compare_with_generic(n: int, p: int, cap: int = DEFAULT_ORACLE_CAP, table_path=None) -> ComparisonReport:
    """Compare the Iwahori-Hecke constants of ``M_n(F_p)`` with the generic algebra at ``q = p``."""
    mm = build_monoid(n, p, cap)
    rook = _rook_monoid(n)
    bd = bruhat_decompose(mm, rook)
    table = iwahori_structure_constants(mm, rook, bd)
    generic = HeckeAlgebra(rook).specialize(p)
    names = [rook.format(r) for r in bd.elements]
    nr = len(names)
    non_integer, mismatches, matches = [], [], 0
    for i in range(nr):
        for j in range(nr):
            for k in range(nr):
                mu = table.value(i, j, k)
                if mu.denominator != 1:
                    non_integer.append(f"mu({names[i]}, {names[j]}, {names[k]}) = {mu}")
                g = generic.value(i, j, k)
                if mu == g:
                    matches += 1
                else:
                    mismatches.append(f"T[{names[i]}] T[{names[j]}] at T[{names[k]}]: oracle {mu}, generic {g}")
    if table_path is not None:
        from .hecke import write_table
        write_table(rook, table.mu, table_path)
    return ComparisonReport(n, p, nr ** 3, matches, non_integer, mismatches, bd.sizes)


def length_oracle(n: int) -> dict:
    """Weighted distance from the identity in the rook Cayley graph.

    Vertices are partial maps ``f`` on ``range(n)`` (``f[j] = -1`` when column
    ``j`` is zero); right multiplication by a transposition costs 1, by a
    diagonal idempotent costs 0. Returns ``{RookElement: length}``.
    """
    ident = tuple(range(n))
    gens = []
    for i in range(n - 1):
        t = list(range(n))
        t[i], t[i + 1] = t[i + 1], t[i]
        gens.append((tuple(t), 1))
    for i in range(n):
        gens.append((tuple(j if j < i else -1 for j in range(n)), 0))

    def compose(a, b):
        return tuple(-1 if b[j] < 0 else a[b[j]] for j in range(n))

    dist = {ident: 0}
    heap = [(0, ident)]
    while heap:
        d, f = heapq.heappop(heap)
        if d > dist[f]:
            continue
        for g, w in gens:
            h = compose(f, g)
            if d + w < dist.get(h, 1 << 30):
                dist[h] = d + w
                heapq.heappush(heap, (d + w, h))
    out = {}
    for f, d in dist.items():
        out[RookElement.from_partial_map(n, {j: f[j] for j in range(n) if f[j] >= 0})] = d
    return out


def representative_independent(mm: FiniteMatrixMonoid, bd: BruhatDecomposition, seed: int = 0) -> bool:
    """Pair counts are unchanged when each representative is replaced by a random coset member."""
    return np.array_equal(count_pairs(mm, bd), count_pairs(mm, bd, alternative_representatives(bd, seed)))


def double_class_constancy_failures(bd: BruhatDecomposition, all_counts: np.ndarray) -> list:
    """``(i, j, k)`` such that ``z -> #{xy = z}`` on ``D_i x D_j`` is not constant on ``D_k``."""
    out = []
    nr = len(bd.elements)
    for i in range(nr):
        for j in range(nr):
            row = all_counts[i, j]
            for k, members in enumerate(bd.members):
                vals = row[members]
                if np.any(vals != vals[0]):
                    out.append((i, j, k))
    return out


def epsilon_checks(mm: FiniteMatrixMonoid) -> list:
    """Failures of ``eps*eps = eps`` and ``h*eps = eps*h = eps`` for ``h`` in ``B``."""
    eps = epsilon(mm)
    fails = []
    if convolve(mm, eps, eps) != eps:
        fails.append("eps*eps != eps")
    for h in mm.borel:
        delta = {int(h): Fraction(1)}
        if convolve(mm, delta, eps) != eps or convolve(mm, eps, delta) != eps:
            fails.append(f"translate of eps by {int(h)} is not eps")
    return fails
