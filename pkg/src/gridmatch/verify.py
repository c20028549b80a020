"""Symbolic-vs-brute-force verification pipeline, reports, and result cache.

A verification cell builds the family graph, applies the homotopy-safe
fold/cone reductions (on by default), takes the independence complex,
computes exact reduced Betti numbers with the torsion screen, and compares
them against the symbolic wedge calculus.  The two routes share nothing
past the graph builder, which is the point.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import __version__
from .complexes import independence_complex
from .errors import ResourceLimitError
from .families import build_family
from .graphs import Graph
from .homology import BettiVector, betti_reduced
from .reduction import reduce_pipeline
from .wedges import WedgeExpression, homotopy_type

DEFAULT_VERIFY_BUDGET = 150_000


@dataclass(frozen=True)
class VerificationReport:
    family: str                      # family tag, "grid(m,n)", or "file"
    n: int
    symbolic: Optional[WedgeExpression]
    betti: Optional[BettiVector]
    status: str                      # match | mismatch | symbolic-only | betti-only | resource-limit
    timings: dict = field(default_factory=dict)   # phase -> milliseconds
    tool_version: str = __version__
    reduced_vertices: Optional[int] = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "symbolic": self.symbolic.to_json() if self.symbolic is not None else None,
            "betti": self.betti.to_json() if self.betti is not None else None,
            "status": self.status,
            "timings": self.timings,
            "version": self.tool_version,
            "reduced_vertices": self.reduced_vertices,
            "note": self.note,
        }


def report_from_json(d: dict) -> VerificationReport:
    sym = d.get("symbolic")
    bet = d.get("betti")
    return VerificationReport(
        family=d["family"],
        n=d["n"],
        symbolic=(WedgeExpression.from_dict({int(k): v for k, v in sym["spheres"].items()})
                  if sym is not None else None),
        betti=(BettiVector({int(k): v for k, v in bet["reduced_betti"].items()},
                           bet["torsion_free"],
                           tuple((dd, tuple(fs)) for dd, fs in bet["torsion_detail"]),
                           bet["method"])
               if bet is not None else None),
        status=d["status"],
        timings=d.get("timings", {}),
        tool_version=d.get("version", ""),
        reduced_vertices=d.get("reduced_vertices"),
        note=d.get("note", ""),
    )


def betti_with_reduction(g: Graph, method: str = "crosscheck",
                         budget: int = DEFAULT_VERIFY_BUDGET,
                         use_reduction: bool = True):
    """(BettiVector, reduced vertex count, timings).  Fold/cone reductions
    preserve the homotopy type of Ind, so Betti numbers are unchanged."""
    timings = {}
    t0 = time.monotonic()
    if use_reduction:
        terminal, _trace = reduce_pipeline(g)
        timings["reduce"] = round((time.monotonic() - t0) * 1000, 1)
        if terminal == "contractible":
            return (BettiVector({}, True, (), method + "+cone"), 0, timings)
        g = terminal
    t0 = time.monotonic()
    k = independence_complex(g)
    timings["complex"] = round((time.monotonic() - t0) * 1000, 1)
    t0 = time.monotonic()
    bv = betti_reduced(k, method=method, budget=budget)
    timings["betti"] = round((time.monotonic() - t0) * 1000, 1)
    return bv, len(g), timings


def _betti_matches_symbolic(bv: BettiVector, w: WedgeExpression) -> bool:
    return bv.as_dict() == w.as_dict()


def verify_cell(family: str, n: int, budget: int = DEFAULT_VERIFY_BUDGET,
                use_reduction: bool = True) -> VerificationReport:
    """Compare the symbolic homotopy type against brute-force homology.

    Always runs the cross-checked Betti computation (GF(2), GF(3), rational,
    SNF when small): a "match" must certify torsion-freeness too.
    """
    timings = {}
    t0 = time.monotonic()
    sym = homotopy_type(family, n)
    timings["symbolic"] = round((time.monotonic() - t0) * 1000, 3)
    t0 = time.monotonic()
    g = build_family(family, n)
    timings["build"] = round((time.monotonic() - t0) * 1000, 1)
    try:
        bv, nred, t = betti_with_reduction(g, "crosscheck", budget, use_reduction)
        timings.update(t)
    except ResourceLimitError as exc:
        return VerificationReport(family, n, sym, None, "resource-limit",
                                  timings, note=str(exc))
    if _betti_matches_symbolic(bv, sym) and bv.torsion_free is True:
        status = "match"
    else:
        status = "mismatch"
    return VerificationReport(family, n, sym, bv, status, timings,
                              reduced_vertices=nred)


# -- result cache ---------------------------------------------------------------

CACHE_ENV = "GRIDMATCH_CACHE_DIR"


def cache_dir() -> Path:
    override = os.environ.get(CACHE_ENV)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "gridmatch"


def _cache_path(key: dict) -> Path:
    blob = json.dumps(key, sort_keys=True).encode()
    digest = hashlib.sha256(blob).hexdigest()[:24]
    return cache_dir() / f"{digest}.json"


def cached(key: dict, compute, no_cache: bool = False):
    """Content-addressed JSON cache with atomic writes."""
    if no_cache:
        return compute()
    path = _cache_path(key)
    if path.exists():
        with open(path) as fh:
            return json.load(fh)
    result = compute()
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(result, fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return result


def _verify_cell_json(args) -> dict:
    family, n, budget, use_reduction = args
    return verify_cell(family, n, budget, use_reduction).to_json()


def run_verify(families, n_max: int, budget: int = DEFAULT_VERIFY_BUDGET,
               use_reduction: bool = True, jobs: int = 1,
               no_cache: bool = False) -> list:
    """Verify every (family, n <= n_max) cell; returns VerificationReports."""
    cells = [(f, n) for f in families for n in range(1, n_max + 1)]

    def key(f, n):
        return {"command": "verify-cell", "family": f, "n": n, "budget": budget,
                "reduce": use_reduction, "version": __version__}

    results = {}
    todo = []
    for f, n in cells:
        if not no_cache:
            path = _cache_path(key(f, n))
            if path.exists():
                with open(path) as fh:
                    results[(f, n)] = json.load(fh)
                continue
        todo.append((f, n))

    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for (f, n), data in zip(todo, pool.map(
                    _verify_cell_json,
                    [(f, n, budget, use_reduction) for f, n in todo])):
                results[(f, n)] = data
    else:
        for f, n in todo:
            results[(f, n)] = _verify_cell_json((f, n, budget, use_reduction))

    for f, n in todo:
        if not no_cache:
            cached(key(f, n), lambda f=f, n=n: results[(f, n)], no_cache=False)
    return [report_from_json(results[(f, n)]) for f, n in cells]
