"""Counterexample families, explicit bijections, Horn counting and parabolic Kostka numbers."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Callable, Iterator, Sequence

from .lr import LRFilling, is_lr_filling, lr_coefficient, multi_lr_coefficient
from .partition import Partition, conjugate, partitions_in_box, skew, stretch
from .quiver import kronecker_si_dim

__all__ = [
    "RectangleSequence",
    "ComparisonRecord",
    "Check",
    "okounkov_family",
    "kostka_family",
    "parabolic_kostka",
    "log_concavity_check",
    "horn_nonvanishing_two_rows",
    "horn_triples",
    "horn_monomial",
    "horn_count_two_rows",
    "construct_E",
    "construct_D",
    "D_ORDER",
    "rows_5_6_completions",
    "exponent_vectors",
    "family_value",
    "counterexample_report",
    "remark_identity_sides",
    "remark_identity_check",
]


@dataclass(frozen=True)
class RectangleSequence:
    """Rectangles (m_i^{l_i}) given as (m_i, l_i) pairs."""

    rectangles: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rects = tuple((int(m), int(l)) for m, l in self.rectangles)
        if any(m < 1 or l < 1 for m, l in rects):
            raise ValueError("rectangle sides must be positive")
        object.__setattr__(self, "rectangles", rects)

    def partitions(self) -> tuple[Partition, ...]:
        return tuple(Partition([m] * l) for m, l in self.rectangles)

    def stretch(self, n: int) -> RectangleSequence:
        if n == 0:
            return RectangleSequence(())
        return RectangleSequence(tuple((n * m, l) for m, l in self.rectangles))

    @property
    def size(self) -> int:
        return sum(m * l for m, l in self.rectangles)


@dataclass(frozen=True)
class Check:
    name: str
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class ComparisonRecord:
    """One instance of value(N+1) * value(N-1) <= value(N)**2."""

    lhs: int
    rhs: int
    holds: bool
    context: dict = field(default_factory=dict, compare=False)
    checks: tuple[Check, ...] = ()


def okounkov_family(n: int) -> tuple[Partition, Partition]:
    """lambda(n) = (4^n, 3^2n, 2^n), mu(n) = (3^n, 2^n, 1^n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lam = Partition([4] * n + [3] * (2 * n) + [2] * n)
    mu = Partition([3] * n + [2] * n + [1] * n)
    return lam, mu


def kostka_family(n: int) -> tuple[Partition, RectangleSequence]:
    """lambda(n) = (2^n, 1^2n) with four copies of the column (1^n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Partition([2] * n + [1] * (2 * n)), RectangleSequence(((1, n),) * 4)


def parabolic_kostka(lam: Sequence[int], rects: RectangleSequence) -> int:
    lam = Partition(lam)
    if lam.size != rects.size:
        return 0
    if not rects.rectangles:
        return 1
    return multi_lr_coefficient(lam, rects.partitions())


def log_concavity_check(values_at: Callable[[int], int], N: int, **context) -> ComparisonRecord:
    if N < 1:
        raise ValueError("N must be >= 1")
    before = 1 if N == 1 else values_at(N - 1)
    here, after = values_at(N), values_at(N + 1)
    lhs, rhs = after * before, here * here
    ctx = {"N": N, "values": (before, here, after), **context}
    return ComparisonRecord(lhs, rhs, lhs <= rhs, ctx)


# -- two-row Horn inequalities ------------------------------------------------


def _two(p: Sequence[int]) -> tuple[int, int]:
    p = Partition(p)
    if len(p) > 2:
        raise ValueError(f"{tuple(p)} has more than two parts")
    return p.part(0), p.part(1)


def horn_nonvanishing_two_rows(n: int, triple: Sequence[Sequence[int]]) -> bool:
    """Size condition plus n - l1(i) - l2(j) - l2(k) >= 0 over the three choices of i."""
    parts = [_two(p) for p in triple]
    if sum(a + b for a, b in parts) != 2 * n:
        return False
    for i in range(3):
        j, k = (x for x in range(3) if x != i)
        if n - parts[i][0] - parts[j][1] - parts[k][1] < 0:
            return False
    return True


def horn_monomial(n: int, triple: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Exponents (n1, ..., n6) of the degree-n monomial attached to a triple."""
    (a1, a2), (b1, b2), (c1, c2) = (_two(p) for p in triple)
    return (
        n - a1 - b2 - c2, a2,
        n - b1 - c2 - a2, b2,
        n - c1 - a2 - b2, c2,
    )


def _horn_raw(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    pool = [(a, b) for a in range(n + 1) for b in range(a + 1)]
    for a1, a2 in pool:
        for b1, b2 in pool:
            rest = 2 * n - a1 - a2 - b1 - b2
            if rest < 0:
                continue
            # third triple member (c1, c2), c1 + c2 = rest, c1 >= c2
            for c2 in range(rest // 2 + 1):
                c1 = rest - c2
                if (
                    n - a1 - b2 - c2 >= 0
                    and n - b1 - a2 - c2 >= 0
                    and n - c1 - a2 - b2 >= 0
                ):
                    yield (a1, a2), (b1, b2), (c1, c2)


def horn_triples(n: int) -> Iterator[tuple[Partition, Partition, Partition]]:
    """All triples of <=2-part partitions satisfying the two-row Horn system."""
    for p, q, r in _horn_raw(n):
        yield Partition(p), Partition(q), Partition(r)


def horn_count_two_rows(n: int) -> int:
    return sum(1 for _ in _horn_raw(n))


# -- the bijections E(a) and D(a) ---------------------------------------------


def construct_E(n: int, a: Sequence[int]) -> LRFilling:
    """Filling of (4n,4n,3n,n)/(3n,2n,n) whose last row holds a1 1's, a2 2's, a3 3's."""
    a1, a2, a3 = a
    if min(a) < 0 or a1 + a2 + a3 != n:
        raise ValueError(f"exponents {tuple(a)} must be nonnegative and sum to {n}")
    lam, mu = okounkov_family(n)
    shape = skew(conjugate(lam), conjugate(mu))
    rows = (
        (1,) * n,
        (1,) * n + (2,) * n,
        (1,) * (n - a1) + (2,) * (n - a2) + (3,) * (n - a3),
        (1,) * a1 + (2,) * a2 + (3,) * a3,
    )
    return LRFilling(shape, rows)


# column types (top, bottom) of the last two rows, in the fixed total order
D_ORDER: tuple[tuple[int, int], ...] = ((1, 2), (2, 4), (2, 6), (3, 4), (4, 6), (5, 6))


def _d_shape(n: int):
    lam, mu = okounkov_family(n)
    return skew(conjugate(stretch(2, lam)), conjugate(stretch(2, mu)))


def _d_fixed_rows(n: int, a: Sequence[int]):
    if len(a) != 6 or min(a) < 0 or sum(a) != n:
        raise ValueError(f"need six nonnegative exponents summing to {n}, got {tuple(a)}")
    top_row: list[int] = []
    bottom_row: list[int] = []
    for (i, j), k in zip(D_ORDER, a):
        top_row += [i] * k
        bottom_row += [j] * k
    head = (
        (1,) * n,
        (2,) * n,
        (1,) * n + (3,) * n,
        (2,) * n + (4,) * n,
    )
    tail = (tuple(sorted(top_row)), tuple(sorted(bottom_row)))
    # content still available for rows 5 and 6
    remaining = {v: n for v in range(1, 7)}
    for v in tail[0] + tail[1]:
        remaining[v] -= 1
    return head, tail, remaining


def construct_D(n: int, a: Sequence[int]) -> LRFilling:
    """Filling of (4n^4, 3n^2, n^2)/(3n^2, 2n^2, n^2) attached to the monomial with exponents ``a``.

    ``a`` follows :data:`D_ORDER`: a_{1,2}, a_{2,4}, a_{2,6}, a_{3,4}, a_{4,6}, a_{5,6}.
    """
    head, tail, r = _d_fixed_rows(n, a)
    # row 5: the 1's, then 3's, then one 5 over each 6 of row 6; no 2's or 4's
    threes = 2 * n - r[1] - r[6]
    if not 0 <= threes <= r[3] or r[5] < r[6]:
        raise ValueError(f"no completion of rows 5-6 for exponents {tuple(a)}")
    row5 = (1,) * r[1] + (3,) * threes + (5,) * r[6]
    row6 = (2,) * r[2] + (3,) * (r[3] - threes) + (4,) * r[4] + (5,) * (r[5] - r[6]) + (6,) * r[6]
    return LRFilling(_d_shape(n), head + (row5, row6) + tail)


def _weakly_increasing_rows(counts: dict[int, int], length: int) -> Iterator[tuple[int, ...]]:
    values = sorted(v for v, c in counts.items() if c > 0)

    def rec(k: int, left: int, acc: tuple[int, ...]):
        if k == len(values):
            if left == 0:
                yield acc
            return
        v = values[k]
        for take in range(min(counts[v], left) + 1):
            yield from rec(k + 1, left - take, acc + (v,) * take)

    yield from rec(0, length, ())


def rows_5_6_completions(n: int, a: Sequence[int]) -> list[LRFilling]:
    """Every LR filling agreeing with D(a) outside rows 5 and 6, found by exhaustive search."""
    head, tail, remaining = _d_fixed_rows(n, a)
    shape = _d_shape(n)
    content = stretch(2, okounkov_family(n)[1]).conjugate()
    found = []
    for row5 in _weakly_increasing_rows(remaining, 2 * n):
        rest = dict(remaining)
        for v in row5:
            rest[v] -= 1
        for row6 in _weakly_increasing_rows(rest, 2 * n):
            f = LRFilling(shape, head + (row5, row6) + tail)
            if is_lr_filling(f, content):
                found.append(f)
    return found


def exponent_vectors(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """All k-tuples of nonnegative integers summing to n."""
    for head in product(range(n + 1), repeat=k - 1):
        s = sum(head)
        if s <= n:
            yield head + (n - s,)


# -- counterexample reports ---------------------------------------------------


def family_value(n: int, N: int) -> int:
    """dim SI(theta(3), (n, n)) in weight (-N, N).

    This equals both c^{N lambda(n)}_{N mu(n), N mu(n)} and
    K_{N lambda(n), N R(n)}. N = 2 goes through the Horn count.
    """
    if N == 0:
        return 1
    if N == 2:
        return horn_count_two_rows(n)
    return kronecker_si_dim(3, n, N)


def _direct_value(family: str, n: int, N: int) -> int:
    if family == "okounkov":
        lam, mu = okounkov_family(n)
        return lr_coefficient(stretch(N, lam), stretch(N, mu), stretch(N, mu))
    lam, rects = kostka_family(n)
    return parabolic_kostka(stretch(N, lam), rects.stretch(N))


# largest n checked directly, per stretch factor N
DIRECT_BOUNDS = {
    "okounkov": {1: 6, 2: 2},
    "kostka": {1: 4, 2: 2},
}


def _report_row(family: str, n: int, N: int, verify_direct: bool, si_bound: int,
                direct_bounds: dict[int, int]) -> ComparisonRecord:
    cache: dict[int, int] = {}

    def value(k: int) -> int:
        if k not in cache:
            cache[k] = family_value(n, k)
        return cache[k]

    rec = log_concavity_check(value, N, family=family, n=n)
    checks = []
    closed = {1: comb(n + 2, 2), 2: comb(n + 5, 5)}
    for k in (N - 1, N, N + 1):
        if k in closed:
            checks.append(Check(f"N={k} closed form", value(k), closed[k]))
        if k == 2 and n <= si_bound:
            checks.append(Check("N=2 horn count vs Cauchy sum", value(2), kronecker_si_dim(3, n, 2)))
        if verify_direct and k >= 1 and n <= direct_bounds.get(k, 0):
            checks.append(Check(f"N={k} direct {family}", value(k), _direct_value(family, n, k)))
    return ComparisonRecord(rec.lhs, rec.rhs, rec.holds, rec.context, tuple(checks))


def counterexample_report(
    n_lo: int,
    n_hi: int,
    family: str = "okounkov",
    N: int = 1,
    verify_direct: bool = False,
    si_bound: int = 8,
    direct_bounds: dict[int, int] | None = None,
    threads: int = 1,
) -> list[ComparisonRecord]:
    """Log-concavity records for n in [n_lo, n_hi], with cross-checks attached."""
    if not 1 <= n_lo <= n_hi:
        raise ValueError("need 1 <= n_lo <= n_hi")
    if family not in DIRECT_BOUNDS:
        raise ValueError(f"unknown family {family!r}")
    bounds = DIRECT_BOUNDS[family] if direct_bounds is None else direct_bounds
    ns = range(n_lo, n_hi + 1)

    def job(n: int) -> ComparisonRecord:
        return _report_row(family, n, N, verify_direct, si_bound, bounds)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(job, ns))
    return [job(n) for n in ns]


def remark_identity_sides(m: int, n: int) -> tuple[int, int]:
    """(K_{m lambda(n), m R(n)}, c^{((4m)^n,(3m)^n,(2m)^n,m^n)}_{((3m)^n,(2m)^n,m^n),((2m)^n,m^2n)})."""
    lam, rects = kostka_family(n)
    left = parabolic_kostka(stretch(m, lam), rects.stretch(m))
    outer = Partition([4 * m] * n + [3 * m] * n + [2 * m] * n + [m] * n)
    first = Partition([3 * m] * n + [2 * m] * n + [m] * n)
    second = Partition([2 * m] * n + [m] * (2 * n))
    return left, lr_coefficient(outer, first, second)


def remark_identity_check(m: int, n: int) -> bool:
    left, right = remark_identity_sides(m, n)
    return left == right
