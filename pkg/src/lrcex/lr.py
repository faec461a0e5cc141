"""Littlewood-Richardson coefficients.

Two independent routes are provided:

* :func:`enumerate_lr_fillings` builds every LR filling cell by cell in
  reading order (right to left, top row first) and checks the lattice
  condition on each prefix. It is slow and is used as the oracle.
* :func:`lr_coefficient` counts fillings row by row. A row of a semistandard
  filling is determined by its multiset of entries, and the lattice condition
  for a whole row only involves the content counts before and after it, so
  the recursion state is (row, entries of the row above that sit over the next
  row, content used so far). The count is memoized on that state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .partition import Partition, SkewShape, partitions_between, stretch

__all__ = [
    "LRFilling",
    "StretchTable",
    "PolynomialFit",
    "is_lattice_word",
    "is_lr_filling",
    "enumerate_lr_fillings",
    "lr_coefficient",
    "multi_lr_coefficient",
    "product_expansion",
    "stretched_values",
    "fit_polynomial",
]


@dataclass(frozen=True)
class LRFilling:
    """Row-wise filling of a skew shape.

    ``rows[i]`` lists the entries of row i of ``shape`` from left to right;
    rows of length zero are kept so that indices match the outer partition.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if len(self.rows) != len(self.shape.outer) or any(
            len(r) != n for r, n in zip(self.rows, self.shape.row_lengths)
        ):
            raise ValueError(
                f"row lengths {[len(r) for r in self.rows]} do not match {self.shape}"
            )

    def word(self) -> tuple[int, ...]:
        """Concatenation of the rows, top to bottom (used for ordering)."""
        return tuple(v for r in self.rows for v in r)

    def reading_word(self) -> tuple[int, ...]:
        """Entries right to left in each row, top row first."""
        return tuple(v for r in self.rows for v in reversed(r))

    def content(self) -> tuple[int, ...]:
        top = max(self.word(), default=0)
        counts = [0] * top
        for v in self.word():
            counts[v - 1] += 1
        return tuple(counts)

    def render(self, blank: str = ".") -> str:
        """ASCII picture of the skew diagram; inner boxes drawn as ``blank``."""
        width = max((len(str(v)) for v in self.word()), default=1)
        lines = []
        for i, row in enumerate(self.rows):
            cells = [blank.rjust(width)] * self.shape.inner.part(i)
            cells += [str(v).rjust(width) for v in row]
            lines.append(" ".join(cells))
        return "\n".join(lines)


@dataclass(frozen=True)
class StretchTable:
    lam: Partition
    mu: Partition
    nu: Partition
    values: tuple[int, ...]


@dataclass(frozen=True)
class PolynomialFit:
    """Result of exact finite-difference interpolation.

    ``degree`` is None when no degree could be confirmed with the supplied
    points; ``coefficients`` are then those of the full Newton interpolant.
    """

    degree: int | None
    coefficients: tuple[Fraction, ...]
    points: int

    @property
    def confirmed(self) -> bool:
        return self.degree is not None

    @property
    def constant_term(self) -> Fraction:
        return self.coefficients[0] if self.coefficients else Fraction(0)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def is_lattice_word(word: Iterable[int]) -> bool:
    counts: dict[int, int] = {}
    for v in word:
        c = counts.get(v, 0) + 1
        if v > 1 and c > counts.get(v - 1, 0):
            return False
        counts[v] = c
    return True


def is_lr_filling(f: LRFilling, content: Sequence[int]) -> bool:
    """Check semistandardness, the lattice condition and the content."""
    inner = f.shape.inner
    for i, row in enumerate(f.rows):
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if any(v < 1 for v in row):
            return False
        if i == 0:
            continue
        above = f.rows[i - 1]
        off_above = inner.part(i - 1)
        off = inner.part(i)
        for t, v in enumerate(row):
            j = off + t
            if j >= off_above and v <= above[j - off_above]:
                return False
    if not is_lattice_word(f.reading_word()):
        return False
    return f.content() == tuple(Partition(content))


def enumerate_lr_fillings(shape: SkewShape, content: Sequence[int]) -> list[LRFilling]:
    """All LR fillings of ``shape`` with the given content.

    Sorted lexicographically by the row-concatenated word.
    """
    content = tuple(Partition(content))
    if shape.size != sum(content):
        return []
    inner, outer = shape.inner, shape.outer
    rows = [[0] * n for n in shape.row_lengths]
    # reading order: top row first, right to left
    order = [(i, j) for i in range(len(outer)) for j in reversed(range(inner.part(i), outer[i]))]
    counts = [0] * (len(content) + 1)
    top = len(content)
    found: list[LRFilling] = []

    def place(k: int):
        if k == len(order):
            found.append(LRFilling(shape, rows))
            return
        i, j = order[k]
        t = j - inner.part(i)
        hi = rows[i][t + 1] if t + 1 < len(rows[i]) else top
        lo = 1
        if i > 0 and j >= inner.part(i - 1):
            lo = rows[i - 1][j - inner.part(i - 1)] + 1
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            rows[i][t] = v
            place(k + 1)
            counts[v] -= 1
        rows[i][t] = 0

    place(0)
    found.sort(key=LRFilling.word)
    return found


def _count_fillings(outer: Partition, inner: Partition, content: tuple[int, ...]) -> int:
    nrows = len(outer)
    inn = [inner.part(i) for i in range(nrows)]
    k = len(content)
    memo: dict = {}

    def rows_for(i: int, above: tuple[int, ...], counts: tuple[int, ...]):
        """Yield (row, new_counts) for every admissible filling of row i."""
        length = outer[i] - inn[i]
        above_off = inn[i - 1] if i > 0 else None
        row: list[int] = []
        cur = list(counts)

        def extend(t: int, prev: int):
            if t == length:
                yield tuple(row), tuple(cur)
                return
            lo = prev
            if above_off is not None:
                j = inn[i] + t
                if j >= above_off:
                    lo = max(lo, above[j - above_off] + 1)
            for v in range(lo, k + 1):
                if cur[v - 1] >= content[v - 1]:
                    continue
                # lattice: after the row, #v must not exceed #(v-1) before it
                if v > 1 and cur[v - 1] + 1 > counts[v - 2]:
                    continue
                cur[v - 1] += 1
                row.append(v)
                yield from extend(t + 1, v)
                row.pop()
                cur[v - 1] -= 1

        yield from extend(0, 1)

    def count(i: int, above: tuple[int, ...], counts: tuple[int, ...]) -> int:
        if i == nrows:
            return 1 if counts == content else 0
        key = (i, above, counts)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        nxt = outer[i + 1] - inn[i] if i + 1 < nrows else 0
        for row, new_counts in rows_for(i, above, counts):
            total += count(i + 1, row[: max(nxt, 0)], new_counts)
        memo[key] = total
        return total

    return count(0, (), (0,) * k)


@lru_cache(maxsize=1 << 18)
def _lr_cached(lam: Partition, mu: Partition, nu: Partition) -> int:
    return _count_fillings(lam, mu, tuple(nu))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """The LR coefficient c^lam_{mu,nu}, counted without materializing fillings."""
    if not (type(lam) is type(mu) is type(nu) is Partition):
        lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size:
        return 0
    if not lam.contains(mu) or not lam.contains(nu):
        return 0
    if not nu:
        return 1 if lam == mu else 0
    if not mu:
        return 1 if lam == nu else 0
    return _lr_cached(lam, mu, nu)


def product_expansion(
    terms: dict[Partition, int], factor: Partition, bound: Partition
) -> dict[Partition, int]:
    """Multiply a Schur expansion by s_factor, keeping only shapes inside ``bound``."""
    out: dict[Partition, int] = {}
    for nu, c in terms.items():
        size = nu.size + factor.size
        for rho in partitions_between(nu, bound, size):
            if not rho.contains(factor):
                continue
            d = lr_coefficient(rho, nu, factor)
            if d:
                out[rho] = out.get(rho, 0) + c * d
    return out


def multi_lr_coefficient(gamma: Sequence[int], factors: Sequence[Sequence[int]]) -> int:
    """Multiplicity of s_gamma in the product of s_f over ``factors``.

    Folds left to right; intermediate shapes are pruned to those inside gamma.
    """
    if not factors:
        raise ValueError("factors must be nonempty")
    gamma = Partition(gamma)
    factors = [Partition(f) for f in factors]
    if sum(f.size for f in factors) != gamma.size:
        return 0
    if not all(gamma.contains(f) for f in factors):
        return 0
    terms = {factors[0]: 1}
    for f in factors[1:-1]:
        terms = product_expansion(terms, f, gamma)
        if not terms:
            return 0
    if len(factors) == 1:
        return terms.get(gamma, 0)
    last = factors[-1]
    return sum(c * lr_coefficient(gamma, nu, last) for nu, c in terms.items())


def stretched_values(lam, mu, nu, n_max: int) -> StretchTable:
    """c^{N lam}_{N mu, N nu} for N = 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    values = tuple(
        lr_coefficient(stretch(n, lam), stretch(n, mu), stretch(n, nu))
        for n in range(n_max + 1)
    )
    return StretchTable(lam, mu, nu, values)


def _difference_table(values: Sequence[int]) -> list[list[int]]:
    table = [list(values)]
    while len(table[-1]) > 1:
        prev = table[-1]
        table.append([b - a for a, b in zip(prev, prev[1:])])
    return table


def _newton_to_power(leading: Sequence[int]) -> tuple[Fraction, ...]:
    """Convert sum_k leading[k] * binom(x, k) to power-basis coefficients."""
    coeffs = [Fraction(0)] * len(leading)
    falling = [Fraction(1)]  # coefficients of x(x-1)...(x-k+1)
    for k, d in enumerate(leading):
        scale = Fraction(d, factorial(k))
        for i, c in enumerate(falling):
            coeffs[i] += scale * c
        nxt = [Fraction(0)] * (len(falling) + 1)
        for i, c in enumerate(falling):
            nxt[i + 1] += c
            nxt[i] -= k * c
        falling = nxt
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def fit_polynomial(values: Sequence[int]) -> PolynomialFit:
    """Fit values at N = 0, 1, ... by exact forward differences.

    Degree d is confirmed only when the (d+1)-th differences exist and all
    vanish, i.e. at least d + 2 points were supplied.
    """
    values = [int(v) for v in values]
    if len(values) < 2:
        raise ValueError("need at least 2 points to fit a polynomial")
    table = _difference_table(values)
    degree = None
    for d in range(len(values) - 1):
        if all(x == 0 for x in table[d + 1]):
            degree = d
            break
    used = len(values) if degree is None else degree + 1
    leading = [table[k][0] for k in range(used)]
    return PolynomialFit(degree, _newton_to_power(leading), len(values))

