"""Quivers, the canonical relation and the quiver shapes used by the package."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence

from tiltrep.errors import ShapeError, UnsupportedType

Vertex = Hashable

INF = "inf"


@dataclass(frozen=True)
class Arrow:
    label: str
    source: Vertex
    target: Vertex


@dataclass(frozen=True)
class Relation:
    """``gamma-path = alpha-path + beta-path``; paths list arrow labels in traversal order."""

    gamma: tuple[str, ...]
    alpha: tuple[str, ...]
    beta: tuple[str, ...]

    def reversed(self) -> "Relation":
        return Relation(self.gamma[::-1], self.alpha[::-1], self.beta[::-1])


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple[Arrow, ...]
    name: str = ""
    relation: Relation | None = None
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise ValueError("arrow labels must be unique")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex labels must be unique")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arrow {a.label} has an unknown endpoint")
            if a.source == a.target:
                raise ValueError("loops are not supported")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    @property
    def has_relation(self) -> bool:
        return self.relation is not None

    def index(self, v: Vertex) -> int:
        return self._index[v]

    def arrow(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise KeyError(label)

    def arrows_between(self, u: Vertex, v: Vertex) -> list[Arrow]:
        return [a for a in self.arrows if a.source == u and a.target == v]

    def in_degree(self, v: Vertex) -> int:
        return sum(1 for a in self.arrows if a.target == v)

    def out_degree(self, v: Vertex) -> int:
        return sum(1 for a in self.arrows if a.source == v)

    def sources(self) -> list:
        return [v for v in self.vertices if self.in_degree(v) == 0]

    def sinks(self) -> list:
        return [v for v in self.vertices if self.out_degree(v) == 0]

    def opposite(self) -> "Quiver":
        arrows = tuple(Arrow(a.label, a.target, a.source) for a in self.arrows)
        rel = self.relation.reversed() if self.relation else None
        return Quiver(self.vertices, arrows, name=f"{self.name}^op", relation=rel)

    def dimvec(self, dims: Mapping[Vertex, int] | Sequence[int]) -> tuple[int, ...]:
        """Normalize a dimension vector to a tuple in vertex order."""
        if isinstance(dims, Mapping):
            return tuple(int(dims.get(v, 0)) for v in self.vertices)
        if len(dims) != len(self.vertices):
            raise ShapeError(f"dimension vector has length {len(dims)}, expected {len(self.vertices)}")
        return tuple(int(d) for d in dims)

    def describe(self) -> str:
        lines = [f"quiver {self.name or '?'}: {len(self.vertices)} vertices, {len(self.arrows)} arrows"]
        lines.append("vertices: " + " ".join(str(v) for v in self.vertices))
        for a in self.arrows:
            lines.append(f"  {a.label}: {a.source} -> {a.target}")
        if self.relation is not None:
            r = self.relation
            lines.append("relation: " + " * ".join(r.gamma[::-1]) + " = "
                         + " * ".join(r.alpha[::-1]) + " + " + " * ".join(r.beta[::-1]))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "vertices": list(self.vertices),
            "arrows": [{"label": a.label, "source": a.source, "target": a.target} for a in self.arrows],
        }
        if self.relation is not None:
            d["relation"] = {"gamma": list(self.relation.gamma), "alpha": list(self.relation.alpha),
                             "beta": list(self.relation.beta)}
        return d


@dataclass(frozen=True)
class CanonicalAlgebra(Quiver):
    p: int = 0
    q: int = 0
    s: int = 0
    # rank = dim(sink) - dim(source); swapped on the opposite algebra
    source_vertex: Vertex = "0"
    sink_vertex: Vertex = INF

    def opposite(self) -> "CanonicalAlgebra":
        arrows = tuple(Arrow(a.label, a.target, a.source) for a in self.arrows)
        return CanonicalAlgebra(self.vertices, arrows, name=f"{self.name}^op",
                                relation=self.relation.reversed(), p=self.p, q=self.q, s=self.s,
                                source_vertex=self.sink_vertex, sink_vertex=self.source_vertex)


def is_domestic(p: int, q: int, s: int) -> bool:
    if min(p, q, s) < 1:
        return False
    if s == 1:
        return True
    if q == 2 and s == 2:
        return p >= 2
    return (p, q, s) in {(3, 3, 2), (4, 3, 2), (5, 3, 2)}


def _arm(prefix: str, sym: str, length: int) -> tuple[list, list[Arrow]]:
    inner = [f"{k}{sym}" for k in range(1, length)]
    chain = ["0", *inner, INF]
    arrows = [Arrow(f"{prefix}{k}", chain[k - 1], chain[k]) for k in range(1, length + 1)]
    return inner, arrows


def build_canonical(p: int, q: int, s: int) -> CanonicalAlgebra:
    """Canonical algebra of type (p, q, s) with arms alpha (upper), beta (middle), gamma (lower).

    Vertex labels: ``"0"``, ``"1".."p-1"``, ``"1'"..``, ``"1''"..``, ``"inf"``.
    """
    if not is_domestic(p, q, s):
        raise UnsupportedType(
            f"({p},{q},{s}) is not domestic; allowed: (p,q,1) p,q>=1; (p,2,2) p>=2; "
            "(3,3,2), (4,3,2), (5,3,2)")
    va, aa = _arm("alpha", "", p)
    vb, ab = _arm("beta", "'", q)
    vc, ac = _arm("gamma", "''", s)
    vertices = ("0", *va, *vb, *vc, INF)
    rel = Relation(tuple(a.label for a in ac), tuple(a.label for a in aa), tuple(a.label for a in ab))
    return CanonicalAlgebra(vertices, tuple(aa + ab + ac), name=f"canonical({p},{q},{s})",
                            relation=rel, p=p, q=q, s=s)


def build_dn(n: int) -> Quiver:
    """Extended Dynkin quiver of type D~_n: 3->1, 3->2, chain k+1->k, n->n-1, n+1->n-1."""
    if n < 4:
        raise UnsupportedType(f"D~_n needs n >= 4, got {n}")
    pairs = [(3, 1), (3, 2)]
    pairs += [(k + 1, k) for k in range(3, n - 1)]
    pairs += [(n, n - 1), (n + 1, n - 1)]
    arrows = tuple(Arrow(f"{u}->{v}", u, v) for u, v in pairs)
    return Quiver(tuple(range(1, n + 2)), arrows, name=f"D~{n}")


def build_e6() -> Quiver:
    """E~_6 with subspace orientation, hub 0."""
    pairs = [(2, 1), (1, 0), (3, 4), (4, 0), (5, 0), (6, 5)]
    arrows = tuple(Arrow(f"{u}->{v}", u, v) for u, v in pairs)
    return Quiver(tuple(range(7)), arrows, name="E~6")


def euler_form_hereditary(Q: Quiver, x, y) -> int:
    """``sum_v x_v y_v - sum_{a: u->v} x_u y_v``."""
    xv = Q.dimvec(x)
    yv = Q.dimvec(y)
    total = sum(a * b for a, b in zip(xv, yv))
    for a in Q.arrows:
        total -= xv[Q.index(a.source)] * yv[Q.index(a.target)]
    return total


def path_counts_from(Q: Quiver, start: Vertex) -> tuple[int, ...]:
    """Number of paths from ``start`` to every vertex (trivial path included).

    For an acyclic quiver this is the dimension vector of the indecomposable
    projective representation at ``start``.
    """
    counts = {v: 0 for v in Q.vertices}
    counts[start] = 1
    order = _topological_order(Q)
    for v in order:
        c = counts[v]
        if c == 0:
            continue
        for a in Q.arrows:
            if a.source == v:
                counts[a.target] += c
    return tuple(counts[v] for v in Q.vertices)


def _topological_order(Q: Quiver) -> list:
    indeg = {v: Q.in_degree(v) for v in Q.vertices}
    ready = [v for v in Q.vertices if indeg[v] == 0]
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for a in Q.arrows:
            if a.source == v:
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
    if len(order) != len(Q.vertices):
        raise ValueError("quiver has an oriented cycle")
    return order


def projective_dimvec(Q: Quiver, k: Vertex) -> tuple[int, ...]:
    return path_counts_from(Q, k)
