"""Representations of quivers (optionally with the canonical relation) and morphisms."""
from __future__ import annotations

import json
from collections import Counter
from typing import Mapping

from tiltrep.errors import FieldMismatch, ShapeError, UnsupportedAlgebra
from tiltrep.linalg import QQ, Field, Matrix, field_from_tag, is_invertible
from tiltrep.quiver import Arrow, CanonicalAlgebra, Quiver, Relation


class Representation:
    """A vector space dimension per vertex and a matrix per arrow.

    The matrix of an arrow ``a: u -> v`` has shape ``dims[v] x dims[u]``.
    With ``strict=False`` ill-shaped input is accepted so that :meth:`validate`
    can report it.
    """

    def __init__(self, quiver: Quiver, dims: Mapping, maps: Mapping[str, Matrix] | None = None,
                 field: Field = QQ, *, strict: bool = True, name: str = ""):
        self.quiver = quiver
        self.field = field
        self.name = name
        self.dims = {v: int(dims.get(v, 0)) for v in quiver.vertices}
        if any(d < 0 for d in self.dims.values()):
            raise ShapeError("negative vertex dimension")
        maps = dict(maps or {})
        unknown = set(maps) - {a.label for a in quiver.arrows}
        if unknown:
            raise KeyError(f"unknown arrows {sorted(unknown)}")
        self.maps: dict[str, Matrix] = {}
        for a in quiver.arrows:
            shape = (self.dims[a.target], self.dims[a.source])
            m = maps.get(a.label)
            if m is None:
                m = Matrix.zeros(*shape, field=field)
            if m.field != field:
                raise FieldMismatch(f"arrow {a.label} is over {m.field!r}, expected {field!r}")
            if strict and m.shape != shape:
                raise ShapeError(f"arrow {a.label}: matrix is {m.shape}, expected {shape}")
            self.maps[a.label] = m

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<Representation{tag} over {self.quiver.name} dims={self.dimvec}>"

    def __getitem__(self, label: str) -> Matrix:
        return self.maps[label]

    @property
    def dimvec(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.quiver.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def same_data(self, other: "Representation") -> bool:
        return (self.quiver == other.quiver and self.field == other.field
                and self.dims == other.dims and self.maps == other.maps)

    def path_matrix(self, labels) -> Matrix:
        """Composite along a path given as arrow labels in traversal order."""
        first = self.quiver.arrow(labels[0])
        out = Matrix.identity(self.dims[first.source], self.field)
        for lab in labels:
            out = self.maps[lab] @ out
        return out

    def validate(self) -> list[str]:
        problems = []
        for a in self.quiver.arrows:
            shape = (self.dims[a.target], self.dims[a.source])
            m = self.maps[a.label]
            if m.shape != shape:
                problems.append(f"arrow {a.label}: matrix shape {m.shape}, expected {shape}")
        if problems or self.quiver.relation is None:
            return problems
        rel = self.quiver.relation
        lhs = self.path_matrix(rel.gamma)
        rhs = self.path_matrix(rel.alpha) + self.path_matrix(rel.beta)
        if lhs != rhs:
            bad = [(i, j) for i in range(lhs.rows) for j in range(lhs.cols) if lhs[i, j] != rhs[i, j]]
            problems.append(f"relation violated at {len(bad)} entries, first {bad[0]}")
        return problems

    def is_valid(self) -> bool:
        return not self.validate()

    def to_dict(self) -> dict:
        return rep_to_dict(self)

    def to_json(self, **kw) -> str:
        return json.dumps(rep_to_dict(self), **kw)


class Morphism:
    """Vertex-indexed family of matrices ``comps[v]: X(v) -> Y(v)``."""

    def __init__(self, source: Representation, target: Representation, comps: Mapping):
        if source.quiver != target.quiver:
            raise ValueError("morphism between representations of different quivers")
        if source.field != target.field:
            raise FieldMismatch("morphism between representations over different fields")
        self.source = source
        self.target = target
        self.comps: dict = {}
        for v in source.quiver.vertices:
            shape = (target.dims[v], source.dims[v])
            m = comps.get(v)
            if m is None:
                m = Matrix.zeros(*shape, field=source.field)
            if m.shape != shape:
                raise ShapeError(f"component at {v!r} is {m.shape}, expected {shape}")
            self.comps[v] = m

    def __getitem__(self, v) -> Matrix:
        return self.comps[v]

    def __repr__(self):
        return f"<Morphism {self.source.dimvec} -> {self.target.dimvec}>"

    def intertwining_defects(self) -> list[str]:
        out = []
        for a in self.source.quiver.arrows:
            lhs = self.comps[a.target] @ self.source.maps[a.label]
            rhs = self.target.maps[a.label] @ self.comps[a.source]
            if lhs != rhs:
                out.append(a.label)
        return out

    def is_intertwiner(self) -> bool:
        return not self.intertwining_defects()

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.comps.values())

    def is_isomorphism(self) -> bool:
        return self.is_intertwiner() and all(is_invertible(m) for m in self.comps.values())

    def compose(self, first: "Morphism") -> "Morphism":
        """``self o first``."""
        if first.target.dims != self.source.dims:
            raise ShapeError("morphisms are not composable")
        return Morphism(first.source, self.target,
                        {v: self.comps[v] @ first.comps[v] for v in self.source.quiver.vertices})

    def scale(self, c) -> "Morphism":
        return Morphism(self.source, self.target, {v: m.scale(c) for v, m in self.comps.items()})

    def vector(self) -> tuple:
        """Stacked entries, vertices in quiver order, each component row-major."""
        return tuple(x for v in self.source.quiver.vertices for x in self.comps[v].entries())

    @classmethod
    def from_vector(cls, source: Representation, target: Representation, vec) -> "Morphism":
        comps = {}
        pos = 0
        for v in source.quiver.vertices:
            r, c = target.dims[v], source.dims[v]
            flat = vec[pos:pos + r * c]
            comps[v] = Matrix(source.field, r, c, [flat[i * c:(i + 1) * c] for i in range(r)])
            pos += r * c
        if pos != len(vec):
            raise ShapeError("vector length does not match hom unknown count")
        return cls(source, target, comps)

    @classmethod
    def identity(cls, X: Representation) -> "Morphism":
        return cls(X, X, {v: Matrix.identity(X.dims[v], X.field) for v in X.quiver.vertices})


# -- constructions ---------------------------------------------------------

def zero_rep(quiver: Quiver, field: Field = QQ) -> Representation:
    return Representation(quiver, {}, {}, field)


def simple_rep(quiver: Quiver, v, field: Field = QQ) -> Representation:
    return Representation(quiver, {v: 1}, {}, field, name=f"S({v})")


def rank(M: Representation) -> int:
    """``dim M(inf) - dim M(0)`` for modules over a canonical algebra."""
    Q = M.quiver
    if not isinstance(Q, CanonicalAlgebra):
        raise UnsupportedAlgebra("rank is defined for canonical algebras only")
    return M.dims[Q.sink_vertex] - M.dims[Q.source_vertex]


def direct_sum(M: Representation, N: Representation) -> Representation:
    if M.quiver != N.quiver:
        raise ValueError("direct sum of representations over different quivers")
    if M.field != N.field:
        raise FieldMismatch("direct sum over different fields")
    dims = {v: M.dims[v] + N.dims[v] for v in M.quiver.vertices}
    maps = {lab: Matrix.block_diag([M.maps[lab], N.maps[lab]], M.field) for lab in M.maps}
    return Representation(M.quiver, dims, maps, M.field)


def dualize(M: Representation) -> Representation:
    """Transpose every matrix; the result lives over the opposite quiver."""
    return Representation(M.quiver.opposite(), M.dims, {lab: m.T for lab, m in M.maps.items()},
                          M.field, name=f"D({M.name})" if M.name else "")


def is_automorphism(Q: Quiver, sigma: Mapping) -> bool:
    perm = {v: sigma.get(v, v) for v in Q.vertices}
    if set(perm.values()) != set(Q.vertices):
        return False
    edges = Counter((a.source, a.target) for a in Q.arrows)
    moved = Counter((perm[a.source], perm[a.target]) for a in Q.arrows)
    return edges == moved


def dn_symmetry(n: int, which: str) -> dict:
    """Named automorphisms of :func:`build_dn`: ``identity``, ``swap12``, ``swapn``, ``both``."""
    table = {
        "identity": {},
        "swap12": {1: 2, 2: 1},
        "swapn": {n: n + 1, n + 1: n},
        "both": {1: 2, 2: 1, n: n + 1, n + 1: n},
    }
    if which not in table:
        raise ValueError(f"unknown symmetry {which!r}; choose from {sorted(table)}")
    return table[which]


def apply_graph_symmetry(N: Representation, sigma: Mapping) -> Representation:
    """Transport ``N`` along the vertex permutation ``sigma`` (missing keys fixed)."""
    Q = N.quiver
    if not is_automorphism(Q, sigma):
        raise ValueError(f"{dict(sigma)} is not an automorphism of {Q.name}")
    perm = {v: sigma.get(v, v) for v in Q.vertices}
    dims = {perm[v]: N.dims[v] for v in Q.vertices}
    maps = {}
    for a in Q.arrows:
        image = Q.arrows_between(perm[a.source], perm[a.target])
        if len(image) != 1:
            raise ValueError("symmetry transport needs a quiver without parallel arrows")
        maps[image[0].label] = N.maps[a.label]
    return Representation(Q, dims, maps, N.field)


# -- JSON ------------------------------------------------------------------

def _entry_str(x) -> str:
    return str(x)


def quiver_to_dict(Q: Quiver) -> dict:
    d = Q.to_dict()
    if isinstance(Q, CanonicalAlgebra):
        d["canonical"] = {"p": Q.p, "q": Q.q, "s": Q.s,
                          "source_vertex": Q.source_vertex, "sink_vertex": Q.sink_vertex}
    return d


def quiver_from_dict(d: dict) -> Quiver:
    arrows = tuple(Arrow(a["label"], a["source"], a["target"]) for a in d["arrows"])
    rel = None
    if "relation" in d:
        r = d["relation"]
        rel = Relation(tuple(r["gamma"]), tuple(r["alpha"]), tuple(r["beta"]))
    if "canonical" in d:
        c = d["canonical"]
        return CanonicalAlgebra(tuple(d["vertices"]), arrows, name=d.get("name", ""), relation=rel,
                                p=c["p"], q=c["q"], s=c["s"],
                                source_vertex=c["source_vertex"], sink_vertex=c["sink_vertex"])
    return Quiver(tuple(d["vertices"]), arrows, name=d.get("name", ""), relation=rel)


def rep_to_dict(M: Representation) -> dict:
    return {
        "field": M.field.tag,
        "quiver": quiver_to_dict(M.quiver),
        "vertices": list(M.quiver.vertices),
        "dims": list(M.dimvec),
        "arrows": [
            {"label": a.label, "rows": M.maps[a.label].rows, "cols": M.maps[a.label].cols,
             "entries": [_entry_str(x) for x in M.maps[a.label].entries()]}
            for a in M.quiver.arrows
        ],
    }


def rep_from_dict(d: dict) -> Representation:
    field = field_from_tag(d.get("field", "q"))
    Q = quiver_from_dict(d["quiver"])
    dims = dict(zip(Q.vertices, d["dims"]))
    maps = {}
    for a in d["arrows"]:
        r, c = a["rows"], a["cols"]
        vals = [field.parse(s) for s in a["entries"]]
        if len(vals) != r * c:
            raise ShapeError(f"arrow {a['label']}: {len(vals)} entries for a {r}x{c} matrix")
        maps[a["label"]] = Matrix(field, r, c, [vals[i * c:(i + 1) * c] for i in range(r)])
    return Representation(Q, dims, maps, field)


def rep_from_json(text: str) -> Representation:
    return rep_from_dict(json.loads(text))
