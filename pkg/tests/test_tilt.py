import pytest

from tiltrep.closedform import dn_rank2, dimvec_map_f, canonical_dimvec, e6_rank3
from tiltrep.errors import TiltingMismatch
from tiltrep.hom import end_dim, find_iso, hom_basis, hom_dim
from tiltrep.linalg import GF
from tiltrep.quiver import build_dn
from tiltrep.rep import simple_rep
from tiltrep.series import build_e6_rank3_series1, build_rank2, build_tilting_dn, build_tilting_e6
from tiltrep.tilt import apply_functor, precomposition_matrix


def test_functor_dims_are_hom_dims():
    T = build_tilting_dn(5)
    M = build_rank2(3, 1, 2, 2)
    out = apply_functor(T, M)
    for k in range(1, 7):
        assert out.rep.dims[k] == hom_dim(T.summands[k], M)
    assert out.rep.is_valid()
    assert out.provenance["tilting"] == "T(D~5)"


@pytest.mark.parametrize("n,i,j,m", [(4, 1, 2, 0), (4, 1, 2, 2), (5, 1, 3, 1), (6, 2, 4, 2)])
def test_functor_matches_closed_form(n, i, j, m):
    F = apply_functor(build_tilting_dn(n), build_rank2(n - 2, i, j, m)).rep
    C = dn_rank2(n, i, j, m)
    assert F.dimvec == C.dimvec
    assert find_iso(F, C).found


def test_functor_respects_dimension_map():
    n = 6
    T = build_tilting_dn(n)
    M = build_rank2(n - 2, 2, 3, 1)
    F = apply_functor(T, M).rep
    assert F.dimvec == dimvec_map_f(n, canonical_dimvec(M))


def test_precomposition_matrix_columns():
    T = build_tilting_dn(4)
    M = build_rank2(2, 1, 2, 1)
    g = T.generator(3, 4)
    Bi, Bj = hom_basis(T.summands[3], M), hom_basis(T.summands[4], M)
    P = precomposition_matrix(g.morphism, Bj, Bi)
    assert P.shape == (Bi.dim, Bj.dim)
    for k, f in enumerate(Bj):
        assert Bi.combination([P[r, k] for r in range(Bi.dim)]).comps == f.compose(g.morphism).comps


def test_e6_series1_image():
    T = build_tilting_e6()
    for m in range(3):
        F = apply_functor(T, build_e6_rank3_series1(m)).rep
        assert end_dim(F) == 1
        assert find_iso(F, e6_rank3(1, m)).found


def test_field_is_carried():
    F = GF(7)
    out = apply_functor(build_tilting_dn(4, F), build_rank2(2, 1, 2, 1, F))
    assert out.rep.field == F


def test_mismatched_vertex_map():
    T = build_tilting_dn(4)
    M = build_rank2(2, 1, 2, 0)
    with pytest.raises(TiltingMismatch):
        apply_functor(T, M, vertex_map={1: 1, 2: 2})
    with pytest.raises(TiltingMismatch):
        apply_functor(T, M, gamma=build_dn(5))
    with pytest.raises(TiltingMismatch):
        apply_functor(T, simple_rep(T.algebra, "0"), vertex_map={v: 1 for v in T.quiver.vertices})
