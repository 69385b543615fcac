"""Exact maxima by exhaustive branch and bound.

Three strategies share one kernel (see ``_backend``):

* ``FullEnum``  - every family of subsets of [n], n <= 4.
* ``UpsetEnum`` - upsets only, n <= 5 (6 on request).  Compression turns any
  admissible family into an admissible upset of the same size, so the two
  maxima agree.
* ``UniformBB`` - subfamilies of one k-uniform layer.

The kernel explores include-before-exclude over a fixed candidate order and
keeps the first family of maximum size it meets, so results do not depend on
the number of worker threads.
"""

from __future__ import annotations

import time
from array import array
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import comb

from unionint import _backend
from unionint.bounds import uniform_upper_bound
from unionint.errors import ParamOutOfRange, TooLarge
from unionint.predicates import is_l_intersecting, is_st_union_intersecting, is_union_l_intersecting
from unionint.setcore import ST, UNIFORM, UNION_L, Family, ProblemSpec, is_upset, k_subsets, popcount

FULL_ENUM = "FullEnum"
UPSET_ENUM = "UpsetEnum"
UNIFORM_BB = "UniformBB"

MAX_N_FULL = 4
MAX_N_UPSET = 5
MAX_N_UPSET_OPT_IN = 6
MAX_LAYER_EXHAUSTIVE = 28
MAX_LAYER_BB = 40
MAX_N_UNIFORM = 20

UPSET_NOTE = "maximum taken over upsets; compression keeps size and admissibility"
ST_COMPRESSION_NOTE = ("for (s,t) regimes compression preservation is confirmed by "
                       "property tests, not by a written proof")


@dataclass(frozen=True)
class SearchResult:
    optimum: int
    witness: Family
    method: str
    nodes: int
    elapsed: float
    notes: tuple[str, ...] = field(default=())

    def as_dict(self, timing: bool = True) -> dict:
        return {
            "optimum": self.optimum,
            "witness": {"n": self.witness.n, "sets": self.witness.to_lists()},
            "method": self.method,
            "nodes": self.nodes,
            "elapsed-ms": round(self.elapsed * 1000, 3) if timing else None,
            "notes": list(self.notes),
        }


# --- candidate orders and tables --------------------------------------------


def descending_order(n: int) -> list[int]:
    """All subsets of [n]: larger sets first, ascending mask within a size."""
    return sorted(range(1 << n), key=lambda m: (-popcount(m), m))


def uniform_order(n: int, k: int) -> list[int]:
    """k-subsets through element 1 first, then the rest; ascending mask within each group."""
    layer = k_subsets(n, k)
    return [m for m in layer if m & 1] + [m for m in layer if not m & 1]


def subset_kill_table(cands: list[int]) -> list[int]:
    """For each candidate, bit j set iff candidate j is a proper subset of it."""
    table = []
    for a in cands:
        bits = 0
        for j, b in enumerate(cands):
            if b != a and b & ~a == 0:
                bits |= 1 << j
        table.append(bits)
    return table


def union_bad_table(n: int, l: int) -> list[int]:
    """bad[w]: bit v set iff |w & v| < l (masks over the 2^n possible unions)."""
    size = 1 << n
    return [sum(1 << v for v in range(size) if popcount(w & v) < l) for w in range(size)]


def _predicate_args(spec: ProblemSpec):
    if spec.regime == UNION_L:
        return _backend.PRED_UNION_L, spec.l, 0
    return _backend.PRED_ST, spec.s, spec.t


def _check_witness(spec: ProblemSpec, F: Family) -> None:
    if spec.regime == UNION_L:
        ok = is_union_l_intersecting(F, spec.l)
    else:
        ok = is_st_union_intersecting(F, spec.s, spec.t)
    if spec.regime == UNIFORM:
        ok = ok and all(popcount(m) == spec.k for m in F)
    if not ok:
        raise RuntimeError(f"search witness fails the {spec.describe()} predicate")


# --- driver -------------------------------------------------------------------


def _prefix_depth(threads: int, ncand: int) -> int:
    if threads <= 1:
        return 0
    d = 1
    while (1 << d) < 4 * threads:
        d += 1
    return min(d, ncand)


def _run(n, cands, *, upset, pred, p1, p2, filter_alive, bound_prune, threads, kernel):
    run = _backend.get_kernel(kernel)
    sub_kill = subset_kill_table(cands) if upset else [0] * len(cands)
    bad = union_bad_table(n, p1) if pred == _backend.PRED_UNION_L else []
    depth = _prefix_depth(threads, len(cands))
    if depth == 0:
        best, bits, nodes = run(n, cands, upset, pred, p1, p2, sub_kill, bad, filter_alive, bound_prune)
        return best, bits, nodes
    # branch order = include-first DFS order over the first `depth` decisions
    prefixes = [sum(b << i for i, b in enumerate(choice)) for choice in product((1, 0), repeat=depth)]
    shared = array("q", [-1] * len(prefixes))

    def task(slot):
        return run(n, cands, upset, pred, p1, p2, sub_kill, bad, filter_alive, bound_prune,
                   depth, prefixes[slot], shared, slot)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(task, range(len(prefixes))))
    nodes = sum(r[2] for r in results)
    best = max(r[0] for r in results)
    for r in results:
        if r[0] == best:
            return best, r[1], nodes
    raise AssertionError("unreachable")


def _finish(spec, cands, best, bits, nodes, method, start, notes=()):
    chosen = [cands[i] for i in range(len(cands)) if bits >> i & 1]
    witness = Family.from_masks(spec.n, chosen)
    if len(witness) != best:
        raise AssertionError("kernel reported an inconsistent witness")
    _check_witness(spec, witness)
    if method == UPSET_ENUM and not is_upset(witness):
        raise RuntimeError("upset search returned a non-upset")
    return SearchResult(best, witness, method, nodes, time.perf_counter() - start, tuple(notes))


def max_family_bruteforce(spec: ProblemSpec, threads: int = 1, kernel: str | None = None) -> SearchResult:
    """Largest admissible family among all families of subsets of [n] (n <= 4)."""
    if spec.regime == UNIFORM:
        raise ParamOutOfRange("full enumeration handles union-l and (s,t) regimes; use max_uniform_family")
    if spec.n > MAX_N_FULL:
        raise TooLarge(f"full enumeration is limited to n <= {MAX_N_FULL}")
    start = time.perf_counter()
    cands = descending_order(spec.n)
    pred, p1, p2 = _predicate_args(spec)
    best, bits, nodes = _run(spec.n, cands, upset=False, pred=pred, p1=p1, p2=p2,
                             filter_alive=False, bound_prune=True, threads=threads, kernel=kernel)
    return _finish(spec, cands, best, bits, nodes, FULL_ENUM, start)


def max_family_upset(spec: ProblemSpec, threads: int = 1, allow_n6: bool = False,
                     kernel: str | None = None) -> SearchResult:
    """Largest admissible upset of subsets of [n]."""
    if spec.regime == UNIFORM:
        raise ParamOutOfRange("upset enumeration handles union-l and (s,t) regimes; use max_uniform_family")
    cap = MAX_N_UPSET_OPT_IN if allow_n6 else MAX_N_UPSET
    if spec.n > cap:
        hint = "" if allow_n6 or spec.n > MAX_N_UPSET_OPT_IN else " (n = 6 needs allow_n6)"
        raise TooLarge(f"upset enumeration is limited to n <= {cap}{hint}")
    start = time.perf_counter()
    cands = descending_order(spec.n)
    pred, p1, p2 = _predicate_args(spec)
    best, bits, nodes = _run(spec.n, cands, upset=True, pred=pred, p1=p1, p2=p2,
                             filter_alive=False, bound_prune=True, threads=threads, kernel=kernel)
    notes = [UPSET_NOTE]
    if spec.regime == ST:
        notes.append(ST_COMPRESSION_NOTE)
    return _finish(spec, cands, best, bits, nodes, UPSET_ENUM, start, notes)


def max_uniform_family(spec: ProblemSpec, threads: int = 1, exhaustive: bool = False,
                       kernel: str | None = None) -> SearchResult:
    """Largest (s,t)-union-intersecting subfamily of the k-subsets of [n].

    ``exhaustive`` turns off the size bound (predicate pruning only) and
    caps the layer at 28 sets; the default branch and bound allows 40.
    """
    if spec.regime != UNIFORM:
        raise ParamOutOfRange("max_uniform_family needs a uniform problem")
    layer = comb(spec.n, spec.k)
    cap = MAX_LAYER_EXHAUSTIVE if exhaustive else MAX_LAYER_BB
    if layer > cap:
        raise TooLarge(f"C({spec.n},{spec.k}) = {layer} exceeds the {'exhaustive' if exhaustive else 'branch-and-bound'} cap {cap}")
    if spec.n > MAX_N_UNIFORM:
        raise TooLarge(f"uniform search keeps 2^n counters; n <= {MAX_N_UNIFORM}")
    start = time.perf_counter()
    cands = uniform_order(spec.n, spec.k)
    best, bits, nodes = _run(spec.n, cands, upset=False, pred=_backend.PRED_ST, p1=spec.s, p2=spec.t,
                             filter_alive=not exhaustive, bound_prune=not exhaustive,
                             threads=threads, kernel=kernel)
    return _finish(spec, cands, best, bits, nodes, UNIFORM_BB, start)


def max_uniform_l_intersecting(n: int, k: int, l: int, threads: int = 1,
                               kernel: str | None = None) -> SearchResult:
    """Largest k-uniform l-intersecting family on [n], by branch and bound."""
    if not 1 <= k <= n:
        raise ParamOutOfRange(f"need 1 <= k <= n, got n={n}, k={k}")
    if l < 1:
        raise ParamOutOfRange(f"l must be >= 1, got {l}")
    if comb(n, k) > MAX_LAYER_BB:
        raise TooLarge(f"C({n},{k}) exceeds {MAX_LAYER_BB}")
    start = time.perf_counter()
    cands = uniform_order(n, k)
    best, bits, nodes = _run(n, cands, upset=False, pred=_backend.PRED_LINT, p1=l, p2=0,
                             filter_alive=True, bound_prune=True, threads=threads, kernel=kernel)
    witness = Family.from_masks(n, [cands[i] for i in range(len(cands)) if bits >> i & 1])
    if not is_l_intersecting(witness, l) or len(witness) != best:
        raise RuntimeError("l-intersecting search returned an invalid witness")
    return SearchResult(best, witness, UNIFORM_BB, nodes, time.perf_counter() - start)


METHODS = ("auto", "full", "upset", "uniform-bb")


def search(spec: ProblemSpec, method: str = "auto", threads: int = 1, allow_n6: bool = False,
           exhaustive: bool = False, kernel: str | None = None) -> SearchResult:
    if method not in METHODS:
        raise ParamOutOfRange(f"unknown method {method!r}; choose from {METHODS}")
    if method == "auto":
        if spec.regime == UNIFORM:
            method = "uniform-bb"
        elif spec.n <= MAX_N_FULL:
            method = "full"
        else:
            method = "upset"
    if method == "full":
        return max_family_bruteforce(spec, threads=threads, kernel=kernel)
    if method == "upset":
        return max_family_upset(spec, threads=threads, allow_n6=allow_n6, kernel=kernel)
    return max_uniform_family(spec, threads=threads, exhaustive=exhaustive, kernel=kernel)


@dataclass(frozen=True)
class ProbeRow:
    n: int
    optimum: int
    bound: int

    @property
    def equal(self) -> bool:
        return self.optimum == self.bound

    @property
    def exceeds(self) -> bool:
        return self.optimum > self.bound


def probe_uniform_threshold(k: int, s: int, t: int, ns, threads: int = 1) -> tuple[list[ProbeRow], int | None]:
    """Compare the k-uniform optimum with C(n-1,k-1)+s-1 over ``ns``.

    Returns the rows and the least tested n from which equality holds for
    every larger tested n (None if the largest tested n already differs).
    This is empirical data about the unknown threshold, nothing more.
    """
    s, t = min(s, t), max(s, t)
    rows = []
    for n in sorted(ns):
        res = max_uniform_family(ProblemSpec.uniform(n, k, s, t), threads=threads)
        rows.append(ProbeRow(n, res.optimum, uniform_upper_bound(n, k, s).value))
    first = None
    for row in reversed(rows):
        if not row.equal:
            break
        first = row.n
    return rows, first
