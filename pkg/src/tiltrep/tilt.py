"""The functor Hom(T, -) from canonical-algebra modules to quiver representations."""
from __future__ import annotations

from dataclasses import dataclass, field

from tiltrep.errors import InternalInconsistency, TiltingMismatch
from tiltrep.hom import HomBasis, hom_basis
from tiltrep.linalg import Matrix
from tiltrep.quiver import Quiver
from tiltrep.rep import Morphism, Representation
from tiltrep.series import TiltingData


@dataclass
class FunctorOutput:
    rep: Representation
    bases: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)


def precomposition_matrix(g: Morphism, B_j: HomBasis, B_i: HomBasis) -> Matrix:
    """Matrix of ``f -> f o g`` from ``Hom(T_j, M)`` to ``Hom(T_i, M)`` for ``g: T_i -> T_j``.

    Column ``k`` holds the coordinates of ``B_j[k] o g`` in ``B_i``.
    """
    field_ = g.source.field
    cols = []
    for f in B_j:
        try:
            cols.append(B_i.coordinates(f.compose(g)))
        except InternalInconsistency:
            raise InternalInconsistency("f o g left Hom(T_i, M); hom solver is inconsistent") from None
    data = [[cols[k][r] for k in range(len(cols))] for r in range(B_i.dim)]
    return Matrix(field_, B_i.dim, B_j.dim, data)


def apply_functor(T: TiltingData, M: Representation, gamma: Quiver | None = None,
                  vertex_map: dict | None = None) -> FunctorOutput:
    """``N = Hom(T, M)`` as a representation of ``gamma``.

    ``N(u) = Hom(T[vertex_map[u]], M)`` in the solver's echelon basis; an arrow
    ``u -> v`` acts by precomposition with the generator
    ``T[vertex_map[v]] -> T[vertex_map[u]]``.
    """
    gamma = gamma if gamma is not None else T.quiver
    vertex_map = vertex_map if vertex_map is not None else T.vertex_map
    if gamma is None:
        raise TiltingMismatch("no target quiver given")
    if sorted(map(repr, vertex_map)) != sorted(map(repr, gamma.vertices)):
        raise TiltingMismatch("vertex map does not cover the quiver")
    if sorted(vertex_map.values()) != sorted(T.summands):
        raise TiltingMismatch("vertex map is not a bijection onto the summands")
    bases = {u: hom_basis(T.summands[vertex_map[u]], M) for u in gamma.vertices}
    maps = {}
    for a in gamma.arrows:
        src, dst = vertex_map[a.target], vertex_map[a.source]
        gen = T.generator(src, dst)
        if gen is None:
            raise TiltingMismatch(f"arrow {a.label} has no generator T_{src} -> T_{dst}")
        maps[a.label] = precomposition_matrix(gen.morphism, bases[a.source], bases[a.target])
    dims = {u: bases[u].dim for u in gamma.vertices}
    N = Representation(gamma, dims, maps, M.field, name=f"F({M.name})" if M.name else "")
    prov = {"module": M.name, "tilting": T.name, "vertex_map": {str(k): v for k, v in vertex_map.items()}}
    return FunctorOutput(N, bases, prov)
