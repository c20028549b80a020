"""Symbolic wedge-of-spheres calculus and the family recursions.

A homotopy type in scope is a finite multiset of spheres {dimension:
count} with the empty multiset standing for a contractible space ("pt").
Wedge is pointwise addition of counts, suspension shifts every dimension,
and pt is absorbing for suspension and neutral for wedge, which mirrors
how contractible summands silently drop out of the computations.

The per-family recursion rules are::

    G_n = B_{n-1} ∨ Σ³ A_{n-3}          (n >= 4; G_3 fixed)
    B_n = Σ G_n ∨ Σ² A_{n-1}            (n >= 3)
    A_n = Σ D_{n-1} ∨ Σ D_{n-1} ∨ Σ³ A_{n-3}   (n >= 4; A_3 fixed)
    D_n = Σ D_{n-1} ∨ Σ J_{n-2}          (n >= 3)
    J_n = O_{n-1} ∨ Σ² D_{n-1}           (n >= 3)
    O_n = Σ² D_n ∨ Σ² Q_{n-1}            (n >= 3)
    M_n = Σ M_{n-1} ∨ Σ² F_{n-2}         (n >= 3)
    Q_n = Σ M_n ∨ Σ² M_{n-1}             (n >= 3)
    F_n = Σ G_n ∨ Σ H_{n-1}              (n >= 3)
    H_n = Σ G_n ∨ Σ² F_{n-2}             (n >= 3)

with hard-coded values for every family at n = 1, 2 plus G_3 and A_3.
Counts are exact big integers; they grow geometrically in n.

Note: these recursions are a symbolic calculus, not an oracle.  The
brute-force homology module exists precisely to check them; `verify`
reports any disagreement rather than assuming either side.
"""

from __future__ import annotations

from dataclasses import dataclass
from threading import Lock

from .errors import InvalidParameterError
from .families import family_id

_PT = ()


@dataclass(frozen=True)
class WedgeExpression:
    """Finite multiset of spheres, stored as sorted ((dim, count), ...).

    The empty tuple denotes a contractible space (pt).  All stored counts
    are strictly positive and dimensions are nonnegative.
    """

    spheres: tuple = _PT

    @staticmethod
    def from_dict(d: dict) -> "WedgeExpression":
        items = []
        for dim, count in sorted(d.items()):
            if count < 0:
                raise InvalidParameterError("sphere counts must be nonnegative")
            if dim < 0 and count:
                raise InvalidParameterError("sphere dimensions must be nonnegative")
            if count:
                items.append((int(dim), int(count)))
        return WedgeExpression(tuple(items))

    @staticmethod
    def point() -> "WedgeExpression":
        return WedgeExpression(_PT)

    @staticmethod
    def sphere(dim: int, count: int = 1) -> "WedgeExpression":
        return WedgeExpression.from_dict({dim: count})

    def as_dict(self) -> dict:
        return dict(self.spheres)

    def is_contractible(self) -> bool:
        return not self.spheres

    def count(self, dim: int) -> int:
        return dict(self.spheres).get(dim, 0)

    def support(self) -> tuple:
        return tuple(d for d, _ in self.spheres)

    def total_spheres(self) -> int:
        return sum(c for _, c in self.spheres)

    def render(self) -> str:
        """Canonical text form sorted by dimension, e.g. '∨_4S^4 ∨ S^5'; 'pt'
        for the contractible space."""
        if not self.spheres:
            return "pt"
        out = []
        for i, (d, c) in enumerate(self.spheres):
            term = f"S^{d}" if c == 1 else f"∨_{c}S^{d}"
            if i == 0:
                out.append(term)
            else:
                out.append(f"∨ {term}" if c == 1 else term)
        return " ".join(out)

    def to_json(self) -> dict:
        return {"spheres": {str(d): c for d, c in self.spheres},
                "contractible": self.is_contractible()}

    def __str__(self):
        return self.render()


def wedge(*exprs: WedgeExpression) -> WedgeExpression:
    """Pointwise sum of sphere counts; pt is the identity."""
    acc = {}
    for e in exprs:
        for d, c in e.spheres:
            acc[d] = acc.get(d, 0) + c
    return WedgeExpression.from_dict(acc)


def suspend(e: WedgeExpression, k: int = 1) -> WedgeExpression:
    """Shift every sphere dimension up by k; pt stays pt."""
    if k < 0:
        raise InvalidParameterError("suspension exponent must be >= 0")
    return WedgeExpression(tuple((d + k, c) for d, c in e.spheres))


# -- base cases ---------------------------------------------------------------

def _w(d: dict) -> WedgeExpression:
    return WedgeExpression.from_dict(d)

_PT_EXPR = WedgeExpression.point()

BASE_CASES = {
    ("G", 1): _w({0: 1}), ("G", 2): _w({1: 2}), ("G", 3): _w({2: 5}),
    ("B", 1): _w({1: 2}), ("B", 2): _w({2: 4}),
    ("A", 1): _w({0: 2}), ("A", 2): _w({1: 2}), ("A", 3): _w({2: 5}),
    ("D", 1): _w({0: 1}), ("D", 2): _w({1: 2}),
    ("J", 1): _w({1: 2}), ("J", 2): _w({2: 2}),
    ("O", 1): _w({2: 1}), ("O", 2): _w({3: 2}),
    ("M", 1): _PT_EXPR,   ("M", 2): _w({2: 1}),
    ("Q", 1): _PT_EXPR,   ("Q", 2): _w({3: 1}),
    ("F", 1): _w({1: 2}), ("F", 2): _w({2: 3}),
    ("H", 1): _w({1: 1}), ("H", 2): _w({2: 3}),
}


def base_case(tag: str, n: int) -> WedgeExpression:
    """Hard-coded homotopy type for n in {1, 2} (all families) plus G_3, A_3."""
    f = family_id(tag)
    try:
        return BASE_CASES[(f, n)]
    except KeyError:
        raise InvalidParameterError(
            f"({f}, {n}) is not a base case; use homotopy_type") from None


# -- memoized recursion -------------------------------------------------------

_memo = dict(BASE_CASES)
_memo_lock = Lock()
_filled_to = 2  # all families computed for n <= _filled_to


def _recurse(f, n, get):
    S, W = suspend, wedge
    if f == "G":
        return W(get("B", n - 1), S(get("A", n - 3), 3))
    if f == "B":
        return W(S(get("G", n)), S(get("A", n - 1), 2))
    if f == "A":
        d = S(get("D", n - 1))
        return W(d, d, S(get("A", n - 3), 3))
    if f == "D":
        return W(S(get("D", n - 1)), S(get("J", n - 2)))
    if f == "J":
        return W(get("O", n - 1), S(get("D", n - 1), 2))
    if f == "O":
        return W(S(get("D", n), 2), S(get("Q", n - 1), 2))
    if f == "M":
        return W(S(get("M", n - 1)), S(get("F", n - 2), 2))
    if f == "Q":
        return W(S(get("M", n)), S(get("M", n - 1), 2))
    if f == "F":
        return W(S(get("G", n)), S(get("H", n - 1)))
    if f == "H":
        return W(S(get("G", n)), S(get("F", n - 2), 2))
    raise InvalidParameterError(f"unknown family {f!r}")


# evaluation order within one n so same-n dependencies (D before O, M
# before Q, G before B/F/H) are already available
_FILL_ORDER = "GADMBJOQFH"


def homotopy_type(tag: str, n: int) -> WedgeExpression:
    """Symbolic homotopy type of Ind of the n-th family member.

    Memoized, filled bottom-up so n in the thousands neither recurses
    deeply nor overflows (counts are Python ints).
    """
    f = family_id(tag)
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    if (f, n) in _memo:
        return _memo[(f, n)]
    global _filled_to
    with _memo_lock:
        m = _filled_to
        while m < n:
            m += 1
            for tag2 in _FILL_ORDER:
                if (tag2, m) not in _memo:
                    _memo[(tag2, m)] = _recurse(tag2, m, lambda a, b: _memo[(a, b)])
        _filled_to = m
    return _memo[(f, n)]


def homotopy_type_uncached(tag: str, n: int) -> WedgeExpression:
    """Memo-free evaluation (plain recursion); for transparency checks."""
    f = family_id(tag)
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    if (f, n) in BASE_CASES:
        return BASE_CASES[(f, n)]
    return _recurse(f, n, homotopy_type_uncached)


def matching_grid3(n: int) -> WedgeExpression:
    """Homotopy type of the matching complex of the 3 x n grid = Ind(G_n)."""
    return homotopy_type("G", n)


# -- path and cycle closed forms ----------------------------------------------

def path_formula(r: int) -> WedgeExpression:
    """Ind(P_r): S^{k-1} if r=3k, pt if r=3k+1, S^k if r=3k+2."""
    if r < 1:
        raise InvalidParameterError("path needs r >= 1")
    k, rem = divmod(r, 3)
    if rem == 0:
        return WedgeExpression.sphere(k - 1)
    if rem == 1:
        return WedgeExpression.point()
    return WedgeExpression.sphere(k)


def cycle_formula(r: int) -> WedgeExpression:
    """Ind(C_r): S^{k-1} ∨ S^{k-1} if r=3k, S^{k-1} if r=3k±1."""
    if r < 3:
        raise InvalidParameterError("cycle needs r >= 3")
    k, rem = divmod(r, 3)
    if rem == 0:
        return WedgeExpression.sphere(k - 1, 2)
    if rem == 1:
        return WedgeExpression.sphere(k - 1)
    return WedgeExpression.sphere(k)  # r = 3(k+1) - 1


# -- predicted dimension ranges ------------------------------------------------

@dataclass(frozen=True)
class DimRange:
    low: int
    high: int

    def __post_init__(self):
        if self.low > self.high:
            raise InvalidParameterError("empty dimension range")

    def as_tuple(self):
        return (self.low, self.high)

    def __str__(self):
        return f"[{self.low}, {self.high}]"


# residue-window offset c and the (low, high) rule per family: with
# k = floor((n - c) / 9), the predicted range below; an inverted interval
# (only M_1 and Q_1) means contractible.
_RANGE_RULES = {
    "G": (0, lambda n, k: (n - 1, n + k - 1)),
    "B": (8, lambda n, k: (n, n + k + 1)),
    "A": (7, lambda n, k: (n - 1, n + k)),
    "D": (6, lambda n, k: (n - 1, n + k)),
    "J": (4, lambda n, k: (n, n + k + 1)),
    "O": (3, lambda n, k: (n + 1, n + k + 2)),
    "M": (2, lambda n, k: (n, n + k)),
    "Q": (2, lambda n, k: (n + 1, n + k + 1)),
    "F": (0, lambda n, k: (n, n + k)),
    "H": (0, lambda n, k: (n, n + k)),
}


def dimension_range(tag: str, n: int):
    """Predicted inclusive dimension range of the wedge, or None (= pt).

    Each family's window [9k+c, 9k+c+8] determines k; consecutive windows
    tile the integers, so k = floor((n-c)/9) and there is no boundary
    ambiguity to resolve.
    """
    f = family_id(tag)
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    c, rule = _RANGE_RULES[f]
    k = (n - c) // 9
    low, high = rule(n, k)
    if low > high:
        return None
    return DimRange(low, high)
