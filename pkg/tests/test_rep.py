import json

import pytest

from tiltrep.errors import FieldMismatch, ShapeError, UnsupportedAlgebra
from tiltrep.linalg import GF, QQ, Matrix
from tiltrep.quiver import INF, build_canonical, build_dn
from tiltrep.rep import (
    Morphism,
    Representation,
    apply_graph_symmetry,
    direct_sum,
    dn_symmetry,
    dualize,
    is_automorphism,
    rank,
    rep_from_json,
    simple_rep,
    zero_rep,
)
from tiltrep.series import build_rank2


def test_missing_maps_are_zero():
    Q = build_dn(4)
    M = Representation(Q, {1: 1, 3: 2})
    assert M["3->1"].shape == (1, 2) and M["3->1"].is_zero()
    assert M.is_valid()


def test_strict_shapes():
    Q = build_dn(4)
    with pytest.raises(ShapeError):
        Representation(Q, {1: 1, 3: 2}, {"3->1": Matrix.identity(2)})
    M = Representation(Q, {1: 1, 3: 2}, {"3->1": Matrix.identity(2)}, strict=False)
    assert M.validate() == ["arrow 3->1: matrix shape (2, 2), expected (1, 2)"]


def test_unknown_arrow_and_field():
    Q = build_dn(4)
    with pytest.raises(KeyError):
        Representation(Q, {}, {"nope": Matrix.zeros(0, 0)})
    with pytest.raises(FieldMismatch):
        Representation(Q, {1: 1, 3: 1}, {"3->1": Matrix.identity(1, GF(2))})


def test_relation_checked():
    L = build_canonical(2, 2, 2)
    one = Matrix.identity(1)
    dims = {v: 1 for v in L.vertices}
    good = Representation(L, dims, {"alpha1": one, "alpha2": one, "beta1": one, "beta2": one,
                                     "gamma1": one, "gamma2": Matrix.from_rows([[2]])})
    assert good.is_valid()
    bad = Representation(L, dims, {"alpha1": one, "alpha2": one, "beta1": one, "beta2": one,
                                    "gamma1": one, "gamma2": one})
    assert bad.validate() and "relation violated" in bad.validate()[0]


def test_rank_needs_canonical():
    M = build_rank2(3, 1, 2, 2)
    assert rank(M) == 2
    with pytest.raises(UnsupportedAlgebra):
        rank(simple_rep(build_dn(4), 1))


def test_direct_sum_and_morphisms():
    Q = build_dn(4)
    S = simple_rep(Q, 3)
    D = direct_sum(S, S)
    assert D.dims[3] == 2
    f = Morphism.identity(D)
    assert f.is_isomorphism()
    g = Morphism(D, D, {3: Matrix.from_rows([[0, 1], [0, 0]])})
    assert g.is_intertwiner() and not g.is_isomorphism()
    assert g.compose(g).is_zero()


def test_morphism_vector_roundtrip():
    M = build_rank2(3, 1, 2, 1)
    f = Morphism.identity(M).scale(3)
    assert Morphism.from_vector(M, M, f.vector()).comps == f.comps


def test_dualize_involution():
    M = build_rank2(3, 1, 2, 1)
    D = dualize(M)
    assert D.quiver.source_vertex == INF
    assert D.is_valid()
    DD = dualize(D)
    assert DD.maps == M.maps and DD.quiver.arrows == M.quiver.arrows


def test_json_roundtrip_exact():
    M = build_rank2(4, 1, 3, 2)
    text = M.to_json()
    back = rep_from_json(text)
    assert back.same_data(M)
    d = json.loads(text)
    assert d["field"] == "q" and all(isinstance(x, str) for a in d["arrows"] for x in a["entries"])


def test_json_roundtrip_fp():
    Q = build_dn(4)
    M = Representation(Q, {1: 1, 3: 1}, {"3->1": Matrix.from_rows([[4]], GF(5))}, GF(5))
    assert rep_from_json(M.to_json()).same_data(M)


def test_symmetries():
    Q = build_dn(5)
    assert is_automorphism(Q, dn_symmetry(5, "both"))
    assert not is_automorphism(Q, {1: 3, 3: 1})
    S = simple_rep(Q, 1)
    T = apply_graph_symmetry(S, dn_symmetry(5, "swap12"))
    assert T.dims[2] == 1 and T.dims[1] == 0
    with pytest.raises(ValueError):
        dn_symmetry(5, "rotate")


def test_zero_rep():
    assert zero_rep(build_dn(4), QQ).total_dim == 0
