"""Reproduction runs: closed forms against exact search, plus seeded property sweeps.

Everything here returns plain dataclasses so the CLI can print them as JSON
or as a table, and the acceptance tests can assert on them.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from math import comb

from unionint.bounds import ak_bound, f_value, sunflower_threshold, uniform_upper_bound, union_l_upper_bound
from unionint.constructions import construct_st_extremal, construct_union_l_extremal
from unionint.errors import TooLarge
from unionint.generators import random_t_intersecting, random_uniform_family, random_union_l_upset
from unionint.matching import disjointness_matching, verify_katona_inequalities, verify_level_inequalities
from unionint.predicates import (
    is_l_intersecting,
    is_st_union_intersecting,
    is_union_l_intersecting,
    sunflower_check,
)
from unionint.search import max_uniform_family, search
from unionint.setcore import Family, ProblemSpec, compress_to_upset
from unionint.sunflower import extract_sunflower

EXACT_ST = ((1, 1), (1, 2), (2, 2), (1, 3))
LOWER_ST = ((1, 4), (2, 3))
UNION_LS = (1, 2, 3)
UNIFORM_CASES = ((6, 2, 2, 2), (7, 2, 1, 2), (7, 2, 2, 2))


@dataclass(frozen=True)
class GridRow:
    regime: str
    n: int
    params: str
    formula: int
    tag: str
    exact: bool
    optimum: int
    method: str
    construction: int
    construction_valid: bool

    @property
    def agrees(self) -> bool:
        if not self.construction_valid:
            return False
        if self.exact:
            return self.formula == self.optimum == self.construction
        # lower-bound case: construction meets the lower bound, search does not undercut it
        return self.construction == self.formula <= self.optimum

    def as_dict(self) -> dict:
        d = asdict(self)
        d["agrees"] = self.agrees
        return d


def exact_grid(max_n: int = 5, threads: int = 1, include_lower: bool = True) -> list[GridRow]:
    """Closed form vs search optimum vs construction size for 3 <= n <= max_n."""
    if max_n > 6:
        raise TooLarge("non-uniform exact search stops at n = 6")
    rows = []
    for n in range(3, max_n + 1):
        for l in UNION_LS:
            spec = ProblemSpec.union_l(n, l)
            bound = union_l_upper_bound(n, l)
            res = search(spec, threads=threads, allow_n6=True)
            F = construct_union_l_extremal(n, l)
            rows.append(GridRow("union-l", n, f"l={l}", bound.value, bound.case_tag, True,
                                res.optimum, res.method, len(F), is_union_l_intersecting(F, l)))
        pairs = EXACT_ST + (LOWER_ST if include_lower else ())
        for s, t in pairs:
            spec = ProblemSpec.st(n, s, t)
            bound = f_value(n, s, t)
            res = search(spec, threads=threads, allow_n6=True)
            F = construct_st_extremal(n, s, t)
            rows.append(GridRow("st", n, f"s={s},t={t}", bound.value, bound.case_tag, bound.exact,
                                res.optimum, res.method, len(F), is_st_union_intersecting(F, s, t)))
    return rows


@dataclass(frozen=True)
class UniformRow:
    n: int
    k: int
    s: int
    t: int
    optimum: int
    star_plus: int
    witness_valid: bool
    witness: list

    @property
    def status(self) -> str:
        if self.optimum == self.star_plus:
            return "equal"
        return "EXCEEDS" if self.optimum > self.star_plus else "below"

    def as_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        return d


def uniform_rows(cases=UNIFORM_CASES, threads: int = 1) -> list[UniformRow]:
    """Exhaustive k-uniform optima next to the star-plus value C(n-1,k-1)+s-1."""
    out = []
    for n, k, s, t in cases:
        spec = ProblemSpec.uniform(n, k, s, t)
        res = max_uniform_family(spec, threads=threads, exhaustive=True)
        W = res.witness
        valid = W.is_uniform() and all(bin(m).count("1") == k for m in W) and \
            is_st_union_intersecting(W, spec.s, spec.t)
        out.append(UniformRow(n, k, spec.s, spec.t, res.optimum,
                              uniform_upper_bound(n, k, spec.s).value, valid, W.to_lists()))
    return out


# --- seeded property sweeps -------------------------------------------------


@dataclass
class SweepResult:
    name: str
    trials: int
    failures: int = 0
    checked: dict = field(default_factory=dict)
    first_failure: object = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def fail(self, info) -> None:
        self.failures += 1
        if self.first_failure is None:
            self.first_failure = info

    def as_dict(self, timing: bool = True) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "failures": self.failures,
            "passed": self.passed,
            "checked": dict(self.checked),
            "first_failure": self.first_failure,
            "seconds": round(self.seconds, 3) if timing else None,
        }


def sunflower_sweep(seed: int, per_case: int = 200, max_k: int = 3, max_r: int = 4) -> SweepResult:
    """Families one set above k!(r-1)^k must yield a checked r-petal sunflower."""
    rng = random.Random(seed)
    res = SweepResult("sunflower", 0)
    start = time.perf_counter()
    for k in range(1, max_k + 1):
        for r in range(1, max_r + 1):
            size = sunflower_threshold(k, r) + 1
            ns = [n for n in range(k, 13) if comb(n, k) >= size]
            for _ in range(per_case):
                n = rng.choice(ns)
                A = random_uniform_family(n, k, size, rng)
                res.trials += 1
                sf = extract_sunflower(A, r)
                ok = sf is not None and len(sf.petals) == r and \
                    set(sf.petals.members) <= set(A.members)
                if ok:
                    chk = sunflower_check(sf.petals)
                    ok = chk.is_sunflower and chk.center == sf.center
                if not ok:
                    res.fail({"n": n, "k": k, "r": r, "sets": A.to_lists()})
            res.checked[f"k={k},r={r}"] = per_case
    res.seconds = time.perf_counter() - start
    return res


def level_sweep(seed: int, per_case: int = 1000, max_n: int = 5, max_l: int = 3) -> SweepResult:
    """Level-pair inequalities on random union-l-intersecting upsets."""
    rng = random.Random(seed)
    res = SweepResult("level-pairs", 0)
    start = time.perf_counter()
    for n in range(3, max_n + 1):
        for l in range(1, max_l + 1):
            for _ in range(per_case):
                F = random_union_l_upset(n, l, rng)
                res.trials += 1
                if not verify_level_inequalities(F, l).passed:
                    res.fail({"n": n, "l": l, "sets": F.to_lists()})
            res.checked[f"n={n},l={l}"] = per_case
    res.seconds = time.perf_counter() - start
    return res


def katona_sweep(seed: int, trials: int = 1000, max_n: int = 6, max_t: int = 3) -> SweepResult:
    rng = random.Random(seed)
    res = SweepResult("katona", trials)
    start = time.perf_counter()
    for _ in range(trials):
        n = rng.randint(3, max_n)
        t = rng.randint(1, max_t)
        F = random_t_intersecting(n, t, rng)
        key = f"t={t}"
        res.checked[key] = res.checked.get(key, 0) + 1
        if not verify_katona_inequalities(F, t).passed:
            res.fail({"n": n, "t": t, "sets": F.to_lists()})
    res.seconds = time.perf_counter() - start
    return res


def matching_sweep(max_n: int = 10) -> SweepResult:
    """Every level pair i <= j, i + j <= n, n <= max_n gets a verified certificate."""
    res = SweepResult("matchings", 0)
    start = time.perf_counter()
    for n in range(max_n + 1):
        for i in range(n + 1):
            for j in range(i, n - i + 1):
                cert = disjointness_matching(n, i, j)
                res.trials += 1
                if not cert.verify() or len(cert.pairs) != min(comb(n, i), comb(n, j)):
                    res.fail({"n": n, "i": i, "j": j})
    res.checked["pairs"] = res.trials
    res.seconds = time.perf_counter() - start
    return res


ST_PAIRS = tuple((s, t) for s in range(1, 5) for t in range(s, 6 - s))


def _compression_input(rng: random.Random, n: int) -> Family:
    # a mix so the predicates are often satisfied before compression
    mode = rng.randrange(3)
    if mode == 0:
        return Family(n, tuple(m for m in range(1 << n) if rng.random() < rng.random()))
    if mode == 1:
        base = construct_st_extremal(n, *rng.choice(ST_PAIRS)).members
    else:
        base = construct_union_l_extremal(n, rng.randint(1, 3)).members
    keep = rng.uniform(0.2, 1.0)
    return Family(n, tuple(m for m in base if rng.random() < keep))


def compression_sweep(seed: int, trials: int = 2000, max_n: int = 5) -> SweepResult:
    """compress_to_upset keeps size, gives an upset, and keeps every predicate that held."""
    rng = random.Random(seed)
    res = SweepResult("compression", trials)
    start = time.perf_counter()
    for _ in range(trials):
        n = rng.randint(3, max_n)
        F = _compression_input(rng, n)
        C = compress_to_upset(F)
        bad = []
        if len(C) != len(F):
            bad.append("size")
        for l in (1, 2, 3):
            if is_union_l_intersecting(F, l):
                res.checked[f"union-{l}"] = res.checked.get(f"union-{l}", 0) + 1
                if not is_union_l_intersecting(C, l):
                    bad.append(f"union-{l}")
            if is_l_intersecting(F, l):
                res.checked[f"{l}-intersecting"] = res.checked.get(f"{l}-intersecting", 0) + 1
                if not is_l_intersecting(C, l):
                    bad.append(f"{l}-intersecting")
        for s, t in ST_PAIRS:
            if is_st_union_intersecting(F, s, t):
                key = f"({s},{t})"
                res.checked[key] = res.checked.get(key, 0) + 1
                if not is_st_union_intersecting(C, s, t):
                    bad.append(key)
        if bad:
            res.fail({"n": n, "sets": F.to_lists(), "lost": bad})
    res.seconds = time.perf_counter() - start
    return res


def property_sweeps(seed: int, scale: float = 1.0) -> list[SweepResult]:
    """All seeded sweeps; ``scale`` shrinks the trial counts for quick runs."""
    def count(x):
        return max(1, int(x * scale))

    return [
        sunflower_sweep(seed, per_case=count(200)),
        level_sweep(seed, per_case=count(1000)),
        katona_sweep(seed, trials=count(1000)),
        matching_sweep(),
        compression_sweep(seed, trials=count(2000)),
    ]


def ak_identity_rows(ns=(4, 6, 8, 10, 12)) -> list[dict]:
    return [{"n": n, "ak": ak_bound(n, n // 2 - 1, 1).value, "closed_form": comb(n - 1, n // 2 - 2)}
            for n in ns]


__all__ = [
    "GridRow", "UniformRow", "SweepResult", "exact_grid", "uniform_rows", "property_sweeps",
    "sunflower_sweep", "level_sweep", "katona_sweep", "matching_sweep", "compression_sweep",
    "ak_identity_rows",
]
