"""Exact reduced simplicial homology.

This is the brute-force side of the tool: enumerate faces, build signed
boundary matrices over the canonical face order, and compute ranks with
several independent kernels:

* GF(2), bit-packed into uint64 words and eliminated with vectorized
  row XORs (the fast default);
* GF(p) for small odd primes, sparse elimination;
* the rationals, via sparse integer elimination on +-1 pivots (entries of
  boundary matrices are +-1 and unit pivots persist in practice; any
  non-unit remainder falls through to a dense Smith normal form), which
  doubles as the integer SNF path and hence the exact torsion certificate.

The chain complex is augmented: the empty face sits in dimension -1, so the
empty complex {∅} gets reduced Betti 1 in degree -1 and all reduced Betti
numbers of a cone vanish.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .complexes import DEFAULT_FACE_BUDGET, FaceTable, SimplicialComplex, face_table
from .errors import InvalidParameterError, ResourceLimitError

SNF_FACE_LIMIT = 20_000         # integer SNF reserved for complexes this small
DENSE_REMAINDER_LIMIT = 4_000_000  # entries; guards the dense SNF fallback


# -- boundary matrices --------------------------------------------------------

@dataclass(frozen=True)
class ChainBoundary:
    """Augmented chain complex: per-dimension bases and sparse boundaries.

    matrices[d] is the matrix of ∂_d as a list of columns, one per d-face,
    each column a tuple of (row_index, sign) over the (d-1)-face basis.
    matrices[0] is the augmentation row onto the empty face.
    """

    bases: FaceTable
    matrices: dict

    def counts(self) -> dict:
        return self.bases.counts()


def _boundary_columns(faces_d, index_lower):
    cols = []
    for f in faces_d:
        col = []
        for j in range(len(f)):
            col.append((index_lower[f[:j] + f[j + 1:]], -1 if j % 2 else 1))
        col.sort()
        cols.append(tuple(col))
    return cols


def boundary_matrices(k: SimplicialComplex, budget: int = DEFAULT_FACE_BUDGET,
                      table: FaceTable = None) -> ChainBoundary:
    t = table if table is not None else face_table(k, budget=budget)
    mats = {}
    maxd = max(t.by_dimension)
    for d in range(0, maxd + 1):
        lower = {f: i for i, f in enumerate(t.by_dimension.get(d - 1, []))}
        mats[d] = _boundary_columns(t.by_dimension.get(d, []), lower)
    return ChainBoundary(t, mats)


def boundary_squares_to_zero(cb: ChainBoundary) -> bool:
    """Direct check that ∂_{d-1} ∘ ∂_d = 0 for every dimension."""
    for d in sorted(cb.matrices):
        if d - 1 not in cb.matrices:
            continue
        lower = cb.matrices[d - 1]
        for col in cb.matrices[d]:
            acc = {}
            for r, s in col:
                for r2, s2 in lower[r]:
                    acc[r2] = acc.get(r2, 0) + s * s2
            if any(v != 0 for v in acc.values()):
                return False
    return True


def format_boundary_matrix(cb: ChainBoundary, d: int) -> str:
    """Coordinate text export: header 'd rows cols nnz', then 'row col value'."""
    cols = cb.matrices.get(d, [])
    rows = len(cb.bases.by_dimension.get(d - 1, []))
    nnz = sum(len(c) for c in cols)
    lines = [f"{d} {rows} {len(cols)} {nnz}"]
    for j, col in enumerate(cols):
        for r, s in col:
            lines.append(f"{r} {j} {s}")
    return "\n".join(lines) + "\n"


# -- rank kernels -------------------------------------------------------------

def rank_gf2(cols, nrows: int) -> int:
    """GF(2) rank of a sparse column list, bit-packed elimination."""
    ncols = len(cols)
    if ncols == 0 or nrows == 0:
        return 0
    words = (nrows + 63) // 64
    m = np.zeros((ncols, words), dtype=np.uint64)
    one = np.uint64(1)
    for i, col in enumerate(cols):
        for r, _s in col:
            m[i, r >> 6] ^= one << np.uint64(r & 63)
    live = m[m.any(axis=1)]
    row = 0
    total = live.shape[0]
    for w in range(words):
        if row >= total:
            break
        for b in range(64):
            if row >= total:
                break
            bit = one << np.uint64(b)
            hits = np.nonzero(live[row:, w] & bit)[0]
            if hits.size == 0:
                continue
            p = row + hits[0]
            if p != row:
                live[[row, p]] = live[[p, row]]
            mask = (live[:, w] & bit).astype(bool)
            mask[row] = False
            if mask.any():
                live[mask] ^= live[row]
            row += 1
    return row


class _SparseElimination:
    """Shared sparse Gaussian elimination over Z (unit pivots) or GF(p).

    Row selection: shortest live row first (lazy heap), then the entry with
    the shortest column; deterministic for fixed input.
    """

    def __init__(self, cols, prime: Optional[int] = None):
        self.p = prime
        self.rowd = {}
        self.cold = {}
        for j, col in enumerate(cols):
            for r, s in col:
                v = s % prime if prime else s
                if v:
                    self.rowd.setdefault(r, {})[j] = v
                    self.cold.setdefault(j, {})[r] = v

    def _pick_pivot(self, rv):
        best = None
        for c, val in rv.items():
            if self.p is None and val not in (1, -1):
                continue
            lc = len(self.cold[c])
            if best is None or lc < best[0] or (lc == best[0] and c < best[1]):
                best = (lc, c)
        return best[1] if best else None

    def run(self):
        """Eliminate; returns (rank, remainder_rows) where remainder is the
        submatrix left once no admissible pivot remains (empty over GF(p))."""
        rowd, cold, p = self.rowd, self.cold, self.p
        heap = [(len(rv), r) for r, rv in rowd.items()]
        heapq.heapify(heap)
        rank = 0
        stuck = []
        while heap:
            lr, pr = heapq.heappop(heap)
            rv = rowd.get(pr)
            if rv is None:
                continue
            if len(rv) != lr:
                heapq.heappush(heap, (len(rv), pr))
                continue
            pc = self._pick_pivot(rv)
            if pc is None:
                stuck.append(pr)  # integer mode: no unit entry in this row
                continue
            pval = rv[pc]
            prow = rowd.pop(pr)
            for c in prow:
                cc = cold.get(c)
                if cc is not None:
                    cc.pop(pr, None)
            pcol = cold.pop(pc, {})
            if p is not None and pval != 1:
                inv = pow(pval, -1, p)
                prow = {c: (v * inv) % p for c, v in prow.items()}
            for r, v in pcol.items():
                rr = rowd[r]
                if p is not None:
                    for c, pv in prow.items():
                        if c == pc:
                            rr.pop(pc, None)
                            continue
                        nv = (rr.get(c, 0) - v * pv) % p
                        self._set(rr, r, c, nv)
                else:
                    mult = v * pval  # pval is +-1, so this is v / pval
                    for c, pv in prow.items():
                        if c == pc:
                            rr.pop(pc, None)
                            continue
                        nv = rr.get(c, 0) - mult * pv
                        self._set(rr, r, c, nv)
                if not rr:
                    del rowd[r]
                else:
                    heapq.heappush(heap, (len(rr), r))
            rank += 1
            # rows shelved for lack of a unit pivot may have changed; retry
            if stuck:
                for r in stuck:
                    if r in rowd:
                        heapq.heappush(heap, (len(rowd[r]), r))
                stuck = []
        remainder = {r: dict(rowd[r]) for r in stuck if r in rowd and rowd[r]}
        return rank, remainder

    def _set(self, rr, r, c, nv):
        if nv:
            rr[c] = nv
            self.cold.setdefault(c, {})[r] = nv
        else:
            if c in rr:
                del rr[c]
                cc = self.cold.get(c)
                if cc:
                    cc.pop(r, None)


def rank_gfp(cols, nrows: int, p: int) -> int:
    if not cols or nrows == 0:
        return 0
    rank, rem = _SparseElimination(cols, prime=p).run()
    assert not rem
    return rank


def rank_integer_with_factors(cols, nrows: int):
    """Exact rank over Q plus the nontrivial invariant factors over Z."""
    if not cols or nrows == 0:
        return 0, ()
    rank, rem = _SparseElimination(cols, prime=None).run()
    if not rem:
        return rank, ()
    rows = sorted(rem)
    colset = sorted({c for rv in rem.values() for c in rv})
    if len(rows) * len(colset) > DENSE_REMAINDER_LIMIT:
        raise ResourceLimitError(
            f"non-unit SNF remainder too large: {len(rows)}x{len(colset)}")
    cix = {c: i for i, c in enumerate(colset)}
    dense = [[0] * len(colset) for _ in rows]
    for i, r in enumerate(rows):
        for c, v in rem[r].items():
            dense[i][cix[c]] = v
    factors, extra_rank = _dense_snf(dense)
    nontrivial = tuple(f for f in factors if f not in (1,))
    return rank + extra_rank, nontrivial


# -- Smith normal form --------------------------------------------------------

def smith_normal_form(matrix):
    """Invariant factors and rank of an integer matrix.

    Accepts any 2D structure of ints (list of rows).  Returns
    (factors, rank) with factors the nonzero diagonal d_1 | d_2 | ...,
    all positive.  Deterministic for fixed input.
    """
    rows = [list(map(int, r)) for r in matrix]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise InvalidParameterError("ragged matrix")
    factors, rank = _dense_snf([r[:] for r in rows])
    return tuple(factors), rank


def _dense_snf(a):
    """In-place dense SNF; returns (positive invariant factors, rank)."""
    if not a or not a[0]:
        return [], 0
    nr, nc = len(a), len(a[0])
    factors = []
    t = 0
    while t < min(nr, nc):
        # locate the minimal-magnitude nonzero entry in the submatrix
        piv = None
        for i in range(t, nr):
            row = a[i]
            for j in range(t, nc):
                v = row[j]
                if v and (piv is None or abs(v) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
                    if abs(v) == 1:
                        break
            if piv and abs(a[piv[0]][piv[1]]) == 1:
                break
        if piv is None:
            break
        i0, j0 = piv
        a[t], a[i0] = a[i0], a[t]
        if j0 != t:
            for row in a:
                row[t], row[j0] = row[j0], row[t]
        while True:
            # clear column t by row reductions
            again = False
            for i in range(t, nr):
                if i != t and a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        for j in range(t, nc):
                            a[i][j] -= q * a[t][j]
                    if a[i][t]:  # remainder smaller than pivot: swap up
                        a[t], a[i] = a[i], a[t]
                        again = True
                        break
            if again:
                continue
            for j in range(t, nc):
                if j != t and a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for i in range(t, nr):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for i in range(t, nr):
                            a[i][t], a[i][j] = a[i][j], a[i][t]
                        again = True
                        break
            if not again:
                break
        # divisibility: pivot must divide every remaining entry
        d = a[t][t]
        bad = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if a[i][j] % d:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for j in range(t, nc):
                a[t][j] += a[bad][j]
            continue
        factors.append(abs(d))
        t += 1
    # normalize divisibility chain (gcd-sort); entries here are positive
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            x, y = factors[i], factors[j]
            g = _gcd(x, y)
            factors[i], factors[j] = g, x * y // g
    return factors, len(factors)


def _gcd(x, y):
    while y:
        x, y = y, x % y
    return x


# -- Betti numbers ------------------------------------------------------------

@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers plus torsion information.

    torsion_free is None when the method used cannot certify it.
    torsion_detail: tuple of (homology dimension, invariant factors != 0, +-1).
    """

    reduced_betti: dict
    torsion_free: Optional[bool] = None
    torsion_detail: tuple = ()
    method: str = ""

    def get(self, d: int) -> int:
        return self.reduced_betti.get(d, 0)

    def support(self) -> tuple:
        return tuple(sorted(d for d, b in self.reduced_betti.items() if b))

    def is_trivial(self) -> bool:
        return not any(self.reduced_betti.values())

    def as_dict(self) -> dict:
        return {d: b for d, b in sorted(self.reduced_betti.items()) if b}

    def to_json(self) -> dict:
        return {
            "reduced_betti": {str(d): b for d, b in self.as_dict().items()},
            "torsion_free": self.torsion_free,
            "torsion_detail": [[d, list(fs)] for d, fs in self.torsion_detail],
            "method": self.method,
        }


METHODS = ("gf2", "gf3", "rank", "snf", "crosscheck")


def _betti_from_ranks(counts, ranks, maxd):
    out = {}
    for d in range(-1, maxd + 1):
        b = counts.get(d, 0) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            out[d] = b
    return out


def _ranks(cb: ChainBoundary, kernel) -> dict:
    ranks = {}
    for d, cols in cb.matrices.items():
        nrows = len(cb.bases.by_dimension.get(d - 1, []))
        ranks[d] = kernel(cols, nrows)
    return ranks


def betti_reduced(k: SimplicialComplex, method: str = "crosscheck",
                  budget: int = DEFAULT_FACE_BUDGET) -> BettiVector:
    """Reduced Betti numbers of k by the requested method.

    gf2 / gf3: single finite field; torsion left undetermined.
    rank: exact rational ranks; torsion left undetermined.
    snf: integer Smith normal form; exact torsion certificate.
    crosscheck: gf2 + gf3 + rational must agree (else torsion_free=False);
        SNF is added when the complex has at most SNF_FACE_LIMIT faces.
    """
    if method not in METHODS:
        raise InvalidParameterError(f"unknown method {method!r}; expected one of {METHODS}")
    cb = boundary_matrices(k, budget=budget)
    counts = {d: len(fs) for d, fs in cb.bases.by_dimension.items()}
    maxd = max(counts)

    if method == "gf2":
        betti = _betti_from_ranks(counts, _ranks(cb, rank_gf2), maxd)
        return BettiVector(betti, None, (), "gf2")
    if method == "gf3":
        betti = _betti_from_ranks(counts, _ranks(cb, lambda c, n: rank_gfp(c, n, 3)), maxd)
        return BettiVector(betti, None, (), "gf3")
    if method == "rank":
        betti = _betti_from_ranks(counts, _ranks(cb, lambda c, n: rank_integer_with_factors(c, n)[0]), maxd)
        return BettiVector(betti, None, (), "rank")
    if method == "snf":
        ranks = {}
        torsion = []
        for d, cols in cb.matrices.items():
            nrows = len(cb.bases.by_dimension.get(d - 1, []))
            r, factors = rank_integer_with_factors(cols, nrows)
            ranks[d] = r
            if factors:
                torsion.append((d - 1, factors))
        betti = _betti_from_ranks(counts, ranks, maxd)
        return BettiVector(betti, not torsion, tuple(sorted(torsion)), "snf")

    # crosscheck
    b2 = _betti_from_ranks(counts, _ranks(cb, rank_gf2), maxd)
    b3 = _betti_from_ranks(counts, _ranks(cb, lambda c, n: rank_gfp(c, n, 3)), maxd)
    ranks_q = {}
    torsion = []
    run_snf = sum(counts.values()) <= SNF_FACE_LIMIT
    for d, cols in cb.matrices.items():
        nrows = len(cb.bases.by_dimension.get(d - 1, []))
        if run_snf:
            r, factors = rank_integer_with_factors(cols, nrows)
            if factors:
                torsion.append((d - 1, factors))
        else:
            r = rank_integer_with_factors(cols, nrows)[0]
        ranks_q[d] = r
    bq = _betti_from_ranks(counts, ranks_q, maxd)
    agree = b2 == b3 == bq and not torsion
    detail = tuple(sorted(torsion))
    if not agree and not detail:
        # field/rational disagreement without SNF factors: record the dims
        dims = sorted({d for d in set(b2) | set(b3) | set(bq)
                       if not (b2.get(d, 0) == b3.get(d, 0) == bq.get(d, 0))})
        detail = tuple((d, ("p-rank disagreement",)) for d in dims)
    return BettiVector(bq, agree, detail, "crosscheck")


def euler_characteristic_reduced(k: SimplicialComplex,
                                 budget: int = DEFAULT_FACE_BUDGET) -> int:
    """χ̃ = Σ_{d >= -1} (-1)^d (number of d-faces), the empty face included."""
    t = face_table(k, budget=budget)
    return sum((1 if d % 2 == 0 else -1) * len(fs)
               for d, fs in t.by_dimension.items())
