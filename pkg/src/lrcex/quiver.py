"""Quivers, the Euler form, weights and semi-invariant dimensions.

Semi-invariant spaces are never built explicitly. For the generalized
Kronecker quiver theta(l) (two vertices, l arrows 2 -> 1) the coordinate ring
of the representation space splits by Cauchy's formula, and the dimension of a
weight space becomes a sum over l-tuples of partitions of products of
multi-LR coefficients against two rectangles.
"""

from __future__ import annotations

from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Hashable, Mapping, Sequence

from .lr import lr_coefficient, product_expansion
from .partition import Partition, partitions_in_box, rectangle

__all__ = [
    "Quiver",
    "DimensionVector",
    "Weight",
    "ExceptionalPair",
    "QuiverError",
    "euler_form",
    "weight_of",
    "kronecker_quiver",
    "kronecker_si_dim",
    "kronecker_si_dim_general",
    "embed",
    "paper_quiver_T434",
    "paper_quiver_K4star",
]

Vertex = Hashable


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    """Vertices plus arrows given as (tail, head) pairs. Must be acyclic."""

    vertices: tuple[Vertex, ...]
    arrows: tuple[tuple[Vertex, Vertex], ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex")
        known = set(self.vertices)
        graph: dict = {v: set() for v in self.vertices}
        for t, h in self.arrows:
            if t not in known or h not in known:
                raise QuiverError(f"arrow {t}->{h} uses an unknown vertex")
            graph[h].add(t)
        try:
            tuple(TopologicalSorter(graph).static_order())
        except CycleError as exc:
            raise QuiverError("quiver has an oriented cycle") from exc

    def vector(self, values: Mapping[Vertex, int] | Sequence[int]) -> DimensionVector:
        return DimensionVector(self, _as_map(self, values))

    def weight(self, values: Mapping[Vertex, int] | Sequence[int]) -> Weight:
        return Weight(self, _as_map(self, values))

    def simple(self, x: Vertex) -> DimensionVector:
        return self.vector({v: int(v == x) for v in self.vertices})


def _as_map(q: Quiver, values) -> dict:
    if isinstance(values, Mapping):
        out = {v: int(values.get(v, 0)) for v in q.vertices}
        extra = set(values) - set(q.vertices)
        if extra:
            raise QuiverError(f"values given for unknown vertices {sorted(map(str, extra))}")
        return out
    values = list(values)
    if len(values) != len(q.vertices):
        raise QuiverError(f"expected {len(q.vertices)} entries, got {len(values)}")
    return {v: int(x) for v, x in zip(q.vertices, values)}


@dataclass(frozen=True, eq=False)
class _VertexFunction:
    quiver: Quiver
    values: dict

    def __post_init__(self):
        if set(self.values) != set(self.quiver.vertices):
            raise QuiverError("values must be defined on exactly the vertices")
        self._validate()

    def _validate(self):
        pass

    def __getitem__(self, x):
        return self.values[x]

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.values[v] for v in self.quiver.vertices)

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and other.quiver == self.quiver
            and other.as_tuple() == self.as_tuple()
        )

    def __hash__(self):
        return hash((type(self).__name__, self.quiver, self.as_tuple()))

    def __add__(self, other):
        _same_quiver(self, other)
        return type(self)(self.quiver, {v: self[v] + other[v] for v in self.quiver.vertices})

    def scale(self, k: int):
        return type(self)(self.quiver, {v: k * self[v] for v in self.quiver.vertices})

    def __repr__(self):
        return f"{type(self).__name__}{self.as_tuple()}"


class DimensionVector(_VertexFunction):
    def _validate(self):
        if any(x < 0 for x in self.values.values()):
            raise QuiverError("dimension vectors are nonnegative")


class Weight(_VertexFunction):
    def __neg__(self) -> Weight:
        return self.scale(-1)

    def __call__(self, beta: DimensionVector) -> int:
        """sigma(beta) = sum over vertices of sigma(x) * beta(x)."""
        _same_quiver(self, beta)
        return sum(self[v] * beta[v] for v in self.quiver.vertices)


def _same_quiver(a, b):
    if a.quiver != b.quiver:
        raise QuiverError("vectors live on different quivers")


@dataclass(frozen=True)
class ExceptionalPair:
    """Dimension vectors e1, e2 on a host quiver with <e2, e1> = -l.

    Only the Euler-form conditions are validated here.
    """

    quiver: Quiver
    e1: DimensionVector
    e2: DimensionVector
    l: int

    def __post_init__(self):
        for e in (self.e1, self.e2):
            if e.quiver != self.quiver:
                raise QuiverError("pair vectors live on a different quiver")
            if euler_form(self.quiver, e, e) != 1:
                raise QuiverError(f"{e} is not a real root: <e, e> != 1")
        if euler_form(self.quiver, self.e2, self.e1) != -self.l:
            raise QuiverError(f"<e2, e1> != -{self.l}")


def euler_form(q: Quiver, alpha: DimensionVector, beta: DimensionVector) -> int:
    if alpha.quiver != q or beta.quiver != q:
        raise QuiverError("vectors live on a different quiver")
    total = sum(alpha[x] * beta[x] for x in q.vertices)
    total -= sum(alpha[t] * beta[h] for t, h in q.arrows)
    return total


def weight_of(q: Quiver, side: str, gamma: DimensionVector) -> Weight:
    """``left`` gives x -> <gamma, e_x>; ``right`` gives x -> <e_x, gamma>."""
    if side == "left":
        return q.weight({x: euler_form(q, gamma, q.simple(x)) for x in q.vertices})
    if side == "right":
        return q.weight({x: euler_form(q, q.simple(x), gamma) for x in q.vertices})
    raise QuiverError(f"side must be 'left' or 'right', not {side!r}")


def kronecker_quiver(l: int) -> Quiver:
    """theta(l): vertices 1, 2 and l arrows from 2 to 1."""
    if l < 1:
        raise QuiverError("theta(l) needs at least one arrow")
    return Quiver((1, 2), ((2, 1),) * l, name=f"theta({l})")


def _tuple_sum(l: int, pool: dict[int, list[Partition]], total: int, left: Partition, right: Partition) -> int:
    """Sum over l-tuples mu of sizes summing to ``total`` of
    c^left_{mu} * c^right_{mu}.

    Partial products are carried as Schur expansions bounded by each target,
    so tuples sharing a prefix share work.
    """
    sizes = sorted(pool)
    same = left == right

    def rec(k: int, remaining: int, lterms: dict, rterms: dict) -> int:
        if k == l - 1:
            acc = 0
            for mu in pool.get(remaining, ()):
                a = sum(c * lr_coefficient(left, nu, mu) for nu, c in lterms.items())
                if not a:
                    continue
                if same:
                    acc += a * a
                else:
                    acc += a * sum(c * lr_coefficient(right, nu, mu) for nu, c in rterms.items())
            return acc
        acc = 0
        for s in sizes:
            if s > remaining:
                break
            for mu in pool[s]:
                nl = product_expansion(lterms, mu, left)
                if not nl:
                    continue
                nr = nl if same else product_expansion(rterms, mu, right)
                if not nr:
                    continue
                acc += rec(k + 1, remaining - s, nl, nr)
        return acc

    empty = {Partition(): 1}
    return rec(0, total, empty, empty)


def kronecker_si_dim(l: int, n: int, m: int) -> int:
    """dim SI(theta(l), (n, n)) in weight (-m, m).

    Sum over l-tuples of partitions inside the m x n box, of total size n*m,
    of the squared multi-LR coefficient against the rectangle (n^m).
    """
    if l < 1:
        raise QuiverError("theta(l) needs at least one arrow")
    if m == 0 or n == 0:
        return 1
    target = rectangle(n, m)
    pool: dict[int, list[Partition]] = {}
    for p in partitions_in_box(m, n):
        pool.setdefault(p.size, []).append(p)
    return _tuple_sum(l, pool, n * m, target, target)


def kronecker_si_dim_general(l: int, beta: Sequence[int], sigma: Sequence[int]) -> int:
    """dim SI(theta(l), beta) in weight sigma, for any beta = (b1, b2).

    Weights that are not of the form (-a, b) with a, b >= 0 and
    a*b1 = b*b2 give 0.
    """
    if l < 1:
        raise QuiverError("theta(l) needs at least one arrow")
    b1, b2 = beta
    s1, s2 = sigma
    if s1 * b1 + s2 * b2 != 0 or s1 > 0 or s2 < 0:
        return 0
    a, b = -s1, s2
    left, right = rectangle(a, b1), rectangle(b, b2)
    if left.size != right.size:
        return 0
    if left.size == 0:
        return 1
    # each factor sits inside both rectangles
    rows, width = min(b1, b2), min(a, b)
    pool: dict[int, list[Partition]] = {}
    for p in partitions_in_box(rows, width):
        pool.setdefault(p.size, []).append(p)
    return _tuple_sum(l, pool, left.size, left, right)


def embed(pair: ExceptionalPair, beta: Sequence[int]) -> DimensionVector:
    """I(b1, b2) = b1 * e1 + b2 * e2 on the host quiver."""
    b1, b2 = beta
    if b1 < 0 or b2 < 0:
        raise QuiverError("embedding takes nonnegative pairs")
    return pair.e1.scale(b1) + pair.e2.scale(b2)


def paper_quiver_T434() -> tuple[Quiver, ExceptionalPair]:
    """Star quiver T_{4,3,4} and the exceptional pair embedding theta(3).

    Vertex names: ``c`` is the center; ``t1, t2, t3`` the top arm and
    ``b1, b2, b3`` the bottom arm (both oriented away from the center, t1/b1
    adjacent to it); ``m1, m2`` the middle arm oriented into the center, m1
    adjacent to it.
    """
    vertices = ("c", "t1", "t2", "t3", "m1", "m2", "b1", "b2", "b3")
    arrows = (
        ("c", "t1"), ("t1", "t2"), ("t2", "t3"),
        ("m2", "m1"), ("m1", "c"),
        ("c", "b1"), ("b1", "b2"), ("b2", "b3"),
    )
    q = Quiver(vertices, arrows, name="T_{4,3,4}")
    e1 = q.vector({"c": 4, "t1": 3, "t2": 2, "t3": 1, "m1": 3, "m2": 0, "b1": 3, "b2": 2, "b3": 1})
    e2 = q.vector({"m2": 1})
    return q, ExceptionalPair(q, e1, e2, 3)


def paper_quiver_K4star() -> tuple[Quiver, ExceptionalPair]:
    """Path a1 -> a2 -> c followed by four arrows from c to leaves l1..l4."""
    vertices = ("a1", "a2", "c", "l1", "l2", "l3", "l4")
    arrows = (("a1", "a2"), ("a2", "c")) + tuple(("c", f"l{i}") for i in range(1, 5))
    q = Quiver(vertices, arrows, name="K4-star")
    e1 = q.vector({"a1": 0, "a2": 3, "c": 4, "l1": 1, "l2": 1, "l3": 1, "l4": 1})
    e2 = q.vector({"a1": 1})
    return q, ExceptionalPair(q, e1, e2, 3)
