"""Closed-form extremal values, evaluated in exact integer arithmetic.

Each public bound returns a :class:`BoundReport` whose components (labelled
addends) always sum to the reported value; the report checks this itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from unionint.errors import ParamOutOfRange


@dataclass(frozen=True)
class BoundReport:
    """A bound value with the formula branch that produced it.

    ``value`` is the exact answer when ``exact`` is true.  Otherwise it is a
    proven lower bound and ``upper`` is either a proven upper bound or None
    when only an asymptotic form with an unknown constant is available.
    """

    value: int
    case_tag: str
    components: tuple[tuple[str, int], ...]
    exact: bool = True
    upper: int | None = None
    argmax: int | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        total = sum(v for _, v in self.components)
        if total != self.value:
            raise AssertionError(f"{self.case_tag}: components sum to {total}, value is {self.value}")
        if self.exact and self.upper is not None and self.upper != self.value:
            raise AssertionError(f"{self.case_tag}: exact report with upper {self.upper} != {self.value}")
        if self.upper is not None and self.upper < self.value:
            raise AssertionError(f"{self.case_tag}: lower {self.value} > upper {self.upper}")

    @property
    def lower(self) -> int:
        return self.value

    def as_dict(self) -> dict:
        d = {
            "value": self.value,
            "exact": self.exact,
            "case": self.case_tag,
            "components": [[label, v] for label, v in self.components],
        }
        if not self.exact:
            d["lower"] = self.value
            d["upper"] = self.upper
        if self.argmax is not None:
            d["argmax"] = self.argmax
        if self.notes:
            d["notes"] = list(self.notes)
        return d


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _tail(n: int, lo: int) -> list[tuple[str, int]]:
    """Components C(n, i) for i = lo..n."""
    return [(f"C({n},{i})", comb(n, i)) for i in range(max(lo, 0), n + 1)]


# --- uniform l-intersecting candidates ---------------------------------------


def ak_candidate_size(n: int, k: int, l: int, i: int) -> int:
    """Number of k-subsets of [n] meeting [l+2i] in at least l+i elements."""
    if not 1 <= l <= k <= n:
        raise ParamOutOfRange(f"need 1 <= l <= k <= n, got n={n}, k={k}, l={l}")
    if not 0 <= i <= (n - l) // 2:
        raise ParamOutOfRange(f"i={i} outside 0..{(n - l) // 2}")
    w = l + 2 * i
    return sum(binomial(w, j) * binomial(n - w, k - j) for j in range(l + i, min(k, w) + 1))


def ak_bound(n: int, k: int, l: int) -> BoundReport:
    """Largest candidate family size, maximised over the window index i.

    Returns 0 when k < l: a k-set cannot share l elements with itself.
    """
    if l < 1:
        raise ParamOutOfRange(f"l must be >= 1, got {l}")
    if k < l:
        return BoundReport(0, "ak/empty", (), notes=("k < l: no nonempty family",))
    if k > n:
        raise ParamOutOfRange(f"k={k} exceeds n={n}")
    best, arg = -1, 0
    for i in range((n - l) // 2 + 1):
        v = ak_candidate_size(n, k, l, i)
        if v > best:
            best, arg = v, i
    return BoundReport(best, "ak", ((f"|F_{arg}|", best),), argmax=arg)


# --- union-l-intersecting ---------------------------------------------------


def union_l_upper_bound(n: int, l: int) -> BoundReport:
    """Maximum size of a union-l-intersecting family on [n].

    Rejects l >= n + 3, where the closed form drops to 0 although any single
    set is (vacuously) admissible.
    """
    if n < 3:
        raise ParamOutOfRange(f"n must be >= 3, got {n}")
    if l < 1:
        raise ParamOutOfRange(f"l must be >= 1, got {l}")
    if l >= n + 3:
        raise ParamOutOfRange(f"l={l} >= n+3: closed form does not apply (answer is 1)")
    if (n + l) % 2 == 0:
        comps = _tail(n, (n + l) // 2 - 1)
        return BoundReport(sum(v for _, v in comps), "union-l/even", tuple(comps))
    k = (n + l - 3) // 2
    ak = ak_bound(n, k, l)
    comps = [(f"AK({n},{k},{l})", ak.value)] + _tail(n, (n + l - 1) // 2)
    return BoundReport(sum(v for _, v in comps), "union-l/odd", tuple(comps), argmax=ak.argmax)


# --- (s,t)-union-intersecting -----------------------------------------------


def _f11(n):
    return BoundReport(2 ** (n - 1), "st/1-1", ((f"2^{n - 1}", 2 ** (n - 1)),))


def _f12(n):
    if n % 2 == 0:
        comps = _tail(n, n // 2)
        return BoundReport(sum(v for _, v in comps), "st/1-2/even", tuple(comps))
    comps = [(f"C({n - 1},{(n - 3) // 2})", comb(n - 1, (n - 3) // 2))] + _tail(n, (n + 1) // 2)
    return BoundReport(sum(v for _, v in comps), "st/1-2/odd", tuple(comps))


def _f22(n):
    if n % 2 == 1:
        comps = _tail(n, (n - 1) // 2)
        return BoundReport(sum(v for _, v in comps), "st/2-2/odd", tuple(comps))
    comps = [(f"C({n - 1},{n // 2 - 2})", binomial(n - 1, n // 2 - 2))] + _tail(n, n // 2)
    return BoundReport(sum(v for _, v in comps), "st/2-2/even", tuple(comps))


def _f13(n):
    if n % 2 == 0:
        comps = _tail(n, n // 2)
        return BoundReport(sum(v for _, v in comps), "st/1-3/even", tuple(comps))
    comps = [(f"C({n - 1},{(n - 1) // 2})", comb(n - 1, (n - 1) // 2))] + _tail(n, (n + 1) // 2)
    return BoundReport(sum(v for _, v in comps), "st/1-3/odd", tuple(comps))


def f_value(n: int, s: int, t: int) -> BoundReport:
    """Largest (s,t)-union-intersecting family on [n], or the best proven lower bound.

    Exact for s + t <= 4.  For larger s + t the lower bound is the exact
    value of the weaker regime it inherits from, (1,3) or (2,2); the upper
    bound carries an unknown O(1/n^2) constant and is left as None.
    """
    if n < 3:
        raise ParamOutOfRange(f"n must be >= 3, got {n}")
    if s < 1 or t < 1:
        raise ParamOutOfRange(f"s and t must be >= 1, got s={s}, t={t}")
    s, t = min(s, t), max(s, t)
    if (s, t) == (1, 1):
        return _f11(n)
    if (s, t) == (1, 2):
        return _f12(n)
    if (s, t) == (2, 2):
        return _f22(n)
    if (s, t) == (1, 3):
        return _f13(n)
    half = comb(n, n // 2)
    if s == 1:
        base = _f13(n)
        shown = Fraction(2 ** (n - 1)) + Fraction(half, 2)
        return BoundReport(
            base.value, "st/1-t/lower", base.components, exact=False,
            notes=(
                f"lower bound inherited from (1,3) [{base.case_tag}]",
                f"displayed lower form 2^(n-1) + C(n,floor(n/2))/2 = {shown}",
                f"upper ~ 2^(n-1) + C(n,floor(n/2))*(1/2 + {t - 2}/n + O(n^-2)); constant unknown",
            ),
        )
    base = _f22(n)
    shown = Fraction(2 ** (n - 1)) + Fraction(half * n, n + 2)
    return BoundReport(
        base.value, "st/s-t/lower", base.components, exact=False,
        notes=(
            f"lower bound inherited from (2,2) [{base.case_tag}]",
            f"displayed lower form 2^(n-1) + C(n,floor(n/2))*n/(n+2) = {shown}",
            f"upper ~ 2^(n-1) + C(n,floor(n/2))*(1 + {s + t - 3}/n + O(n^-2)); constant unknown",
        ),
    )


def f22_display_gap(n: int) -> Fraction:
    """f(n,2,2) minus the displayed form 2^(n-1) + C(n, n//2) * n/(n+2); zero for even n."""
    return Fraction(_f22(n).value) - (Fraction(2 ** (n - 1)) + Fraction(comb(n, n // 2) * n, n + 2))


def f13_display_gap(n: int) -> Fraction:
    """f(n,1,3) minus 2^(n-1) + C(n, n//2)/2; zero for even n."""
    return Fraction(_f13(n).value) - (Fraction(2 ** (n - 1)) + Fraction(comb(n, n // 2), 2))


# --- k-uniform regime and helper counts ---------------------------------------


def uniform_upper_bound(n: int, k: int, s: int) -> BoundReport:
    """Star plus s-1 extra sets: the large-n maximum for k-uniform (s,t) families."""
    if not 1 <= k <= n:
        raise ParamOutOfRange(f"need 1 <= k <= n, got n={n}, k={k}")
    if s < 1:
        raise ParamOutOfRange(f"s must be >= 1, got {s}")
    star = comb(n - 1, k - 1)
    comps = ((f"C({n - 1},{k - 1})", star), ("s-1", s - 1))
    return BoundReport(
        star + s - 1, "uniform/large-n", comps,
        notes=("holds only for n > n(k,t); the threshold is not known",),
    )


def sunflower_threshold(k: int, r: int) -> int:
    """k! (r-1)^k: any larger k-uniform family has an r-petal sunflower."""
    if k < 0 or r < 1:
        raise ParamOutOfRange(f"need k >= 0 and r >= 1, got k={k}, r={r}")
    return factorial(k) * (r - 1) ** k


def double_hit_bound(n: int, k: int, c: int) -> int:
    """Number of k-subsets of [n] meeting a fixed c-set in at least 2 elements."""
    if not 2 <= c <= n or not 0 <= k <= n:
        raise ParamOutOfRange(f"need 2 <= c <= n and 0 <= k <= n, got n={n}, k={k}, c={c}")
    return sum(binomial(c, i) * binomial(n - c, k - i) for i in range(2, c + 1))


def level_pair_bound(n: int, l: int, i: int) -> int:
    """C(n, n+l-3-i): cap on |F^i| + |F^(n+l-3-i)| for union-l-intersecting upsets."""
    if l < 1 or not 0 <= i or not 2 * i < n + l - 3:
        raise ParamOutOfRange(f"need l >= 1 and 0 <= i < (n+l-3)/2, got n={n}, l={l}, i={i}")
    j = n + l - 3 - i
    if j > n:
        raise ParamOutOfRange(f"partner level {j} exceeds n={n}")
    return comb(n, j)


def katona_level_bound(n: int, t: int, i: int) -> int:
    """C(n, n+t-1-i): cap on |F^i| + |F^(n+t-1-i)| for t-intersecting families."""
    if t < 1 or not 0 <= i or not 2 * i < n + t - 1:
        raise ParamOutOfRange(f"need t >= 1 and 0 <= i < (n+t-1)/2, got n={n}, t={t}, i={i}")
    j = n + t - 1 - i
    if j > n:
        raise ParamOutOfRange(f"partner level {j} exceeds n={n}")
    return comb(n, j)
