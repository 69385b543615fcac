"""Disjointness matchings between two levels of the Boolean lattice,
and the level-pair inequalities they imply."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from unionint.bounds import binomial, katona_level_bound, level_pair_bound
from unionint.errors import NoEdges, ParamOutOfRange, PreconditionFailed
from unionint.predicates import is_l_intersecting, is_union_l_intersecting
from unionint.setcore import Family, SetMask, is_upset, k_subsets, level_sizes


@dataclass(frozen=True)
class MatchingCertificate:
    n: int
    i: int
    j: int
    pairs: tuple[tuple[SetMask, SetMask], ...]
    covered: str  # "lower" or "upper": the class every vertex of which is matched

    def verify(self) -> bool:
        """Re-check the certificate from scratch, without the matching code."""
        lows = [a for a, _ in self.pairs]
        highs = [b for _, b in self.pairs]
        if len(set(lows)) != len(lows) or len(set(highs)) != len(highs):
            return False
        for a, b in self.pairs:
            if a.bit_count() != self.i or b.bit_count() != self.j or a & b:
                return False
            if a >> self.n or b >> self.n:
                return False
        want = min(binomial(self.n, self.i), binomial(self.n, self.j))
        return len(self.pairs) == want


def hopcroft_karp(adj: list[list[int]], n_right: int) -> list[int]:
    """Maximum matching; returns match_left[u] = v or -1.

    Deterministic for a fixed adjacency order.
    """
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    inf = n_left + 1
    dist = [0] * n_left

    def bfs() -> bool:
        queue = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        # iterative augmenting-path search along the BFS layering
        stack = [(u, iter(adj[u]))]
        path = []
        while stack:
            node, it = stack[-1]
            advanced = False
            for v in it:
                w = match_r[v]
                if w == -1:
                    path.append((node, v))
                    for a, b in path:
                        match_l[a] = b
                        match_r[b] = a
                    return True
                if dist[w] == dist[node] + 1:
                    path.append((node, v))
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                dist[node] = inf
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for u in range(n_left):
            if match_l[u] == -1:
                dfs(u)
    return match_l


def disjointness_matching(n: int, i: int, j: int) -> MatchingCertificate:
    """Maximum matching between i-sets and j-sets of [n], edges joining disjoint sets."""
    if not 0 <= i <= j <= n:
        raise ParamOutOfRange(f"need 0 <= i <= j <= n, got n={n}, i={i}, j={j}")
    if i + j > n:
        raise NoEdges(f"no {i}-set is disjoint from a {j}-set when i+j={i + j} > n={n}")
    low = k_subsets(n, i)
    high = k_subsets(n, j)
    index = {b: idx for idx, b in enumerate(high)}
    full = (1 << n) - 1
    adj = []
    for a in low:
        # j-subsets of the complement of a, ascending
        adj.append(sorted(index[b] for b in _subsets_of_size(full & ~a, j)))
    match = hopcroft_karp(adj, len(high))
    pairs = tuple((low[u], high[v]) for u, v in enumerate(match) if v != -1)
    covered = "lower" if len(low) <= len(high) else "upper"
    return MatchingCertificate(n, i, j, pairs, covered)


def _subsets_of_size(mask: int, size: int) -> list[int]:
    bits = []
    m = mask
    while m:
        low = m & -m
        bits.append(low)
        m ^= low
    out = []

    def rec(start, chosen, acc):
        if chosen == size:
            out.append(acc)
            return
        for idx in range(start, len(bits) - (size - chosen) + 1):
            rec(idx + 1, chosen + 1, acc | bits[idx])

    rec(0, 0, 0)
    return out


@dataclass(frozen=True)
class LevelRow:
    i: int
    j: int
    count_i: int
    count_j: int
    bound: int

    @property
    def total(self) -> int:
        return self.count_i + self.count_j

    @property
    def ok(self) -> bool:
        return self.total <= self.bound


@dataclass(frozen=True)
class LevelReport:
    kind: str
    n: int
    param: int
    rows: tuple[LevelRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "param": self.param,
            "passed": self.passed,
            "rows": [
                {"i": r.i, "j": r.j, "count_i": r.count_i, "count_j": r.count_j,
                 "sum": r.total, "bound": r.bound, "ok": r.ok}
                for r in self.rows
            ],
        }


def _level_rows(F: Family, offset: int, bound_fn, param: int) -> tuple[LevelRow, ...]:
    # pairs (i, offset - i) for 0 <= i < offset/2 whose partner level exists
    sizes = level_sizes(F)
    n = F.n
    rows = []
    i = 0
    while 2 * i < offset:
        j = offset - i
        if j <= n:
            rows.append(LevelRow(i, j, sizes[i], sizes[j], bound_fn(n, param, i)))
        i += 1
    return tuple(rows)


def level_inequality_report(F: Family, l: int) -> LevelReport:
    """Level-pair table for a union-l-intersecting upset, without re-checking the precondition."""
    if l < 1:
        raise ParamOutOfRange(f"l must be >= 1, got {l}")
    return LevelReport("union-l", F.n, l, _level_rows(F, F.n + l - 3, level_pair_bound, l))


def verify_level_inequalities(F: Family, l: int) -> LevelReport:
    if not is_upset(F):
        raise PreconditionFailed("family is not an upset")
    if not is_union_l_intersecting(F, l):
        raise PreconditionFailed(f"family is not union-{l}-intersecting")
    return level_inequality_report(F, l)


def verify_katona_inequalities(F: Family, t: int) -> LevelReport:
    if t < 1:
        raise ParamOutOfRange(f"t must be >= 1, got {t}")
    if not is_l_intersecting(F, t):
        raise PreconditionFailed(f"family is not {t}-intersecting")
    return LevelReport("t-intersecting", F.n, t, _level_rows(F, F.n + t - 1, katona_level_bound, t))
