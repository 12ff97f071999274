import json

import pytest

from tiltrep.closedform import (
    FamilyId,
    block_matrix,
    build_family,
    canonical_dimvec,
    dimvec_map_f,
    dn_rank1,
    dn_rank2,
    e6_rank3,
    matrix_letters,
    periodic_sign_vector,
    render_json,
    render_text,
)
from tiltrep.errors import ShapeError
from tiltrep.hom import end_dim, ext1_dim_hereditary, find_iso
from tiltrep.linalg import GF
from tiltrep.rep import rep_from_json
from tiltrep.series import build_rank2
from tiltrep.verify import e6_series2_obstruction


def test_periodic_vectors():
    assert periodic_sign_vector("v4", 6) == (-1, 1, 1, -1, -1, 1)
    assert periodic_sign_vector("e6_row1", 6) == (-1, 1, 0, 1, -1, 0)
    assert periodic_sign_vector("e6_row2", 7) == (-1, 0, 1, 1, 0, -1, -1)
    assert periodic_sign_vector("alt", 3) == (1, -1, 1)
    assert periodic_sign_vector("v4", 0) == ()
    with pytest.raises(ValueError):
        periodic_sign_vector("v5", 2)


def test_block_matrix():
    M = block_matrix(3, 4, [("I", 0, 1, 2, 1), ("row", 2, 0, [5, 6])])
    assert M.to_lists() == [[0, 1, 0, 0], [0, 0, 1, 0], [5, 6, 0, 0]]
    assert block_matrix(0, 3, [("I", 0, 0, -1, 1)]).shape == (0, 3)
    with pytest.raises(ShapeError):
        block_matrix(2, 2, [("I", 0, 0, -1, 1)])
    with pytest.raises(ShapeError):
        block_matrix(2, 2, [("I", 1, 1, 2, 1)])
    with pytest.raises(ValueError):
        block_matrix(2, 2, [("J", 0, 0, 1, 1)])


def test_dn_rank2_dims():
    N = dn_rank2(6, 1, 3, 2)
    # chain: 2m+2 up to n-j, 2m+1 up to n-i, then 2m
    assert N.dimvec == (3, 3, 6, 5, 5, 2, 2)
    assert dn_rank2(4, 1, 2, 0).dimvec == (1, 1, 1, 0, 0)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_dn_rank2_exceptional(n, m):
    for i in range(1, n - 2):
        for j in range(i + 1, n - 1):
            N = dn_rank2(n, i, j, m)
            assert N.is_valid()
            assert end_dim(N) == 1 and ext1_dim_hereditary(N, N) == 0


def test_dn_rank2_rejects():
    with pytest.raises(ValueError):
        dn_rank2(3, 1, 2, 0)
    with pytest.raises(ValueError):
        dn_rank2(5, 2, 2, 0)
    with pytest.raises(ValueError):
        dn_rank2(5, 1, 2, -1)


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_dn_rank1_exceptional(t):
    for n in (4, 5, 6):
        for i in range(1, n - 1):
            for m in range(1, 4):
                N = dn_rank1(t, i, m, n)
                assert end_dim(N) == 1 and ext1_dim_hereditary(N, N) == 0


def test_dn_rank1_rejects():
    with pytest.raises(ValueError):
        dn_rank1(3, 1, 0, 5)
    with pytest.raises(ValueError):
        dn_rank1(5, 1, 1, 5)
    with pytest.raises(ValueError):
        dn_rank1(1, 4, 1, 5)
    assert dn_rank1(1, 1, 0, 5).is_valid()


def test_dimvec_map():
    assert dimvec_map_f(5, [0] * 6) == (0,) * 6
    a, b = [1, 2, 0, 1, 1, 1], [0, 1, 3, 2, 0, 1]
    fa, fb = dimvec_map_f(5, a), dimvec_map_f(5, b)
    assert dimvec_map_f(5, [x + y for x, y in zip(a, b)]) == tuple(x + y for x, y in zip(fa, fb))
    with pytest.raises(ShapeError):
        dimvec_map_f(5, [1, 2])
    M = build_rank2(3, 1, 2, 1)
    assert dimvec_map_f(5, canonical_dimvec(M)) == dn_rank2(5, 1, 2, 1).dimvec


@pytest.mark.parametrize("m", range(0, 5))
def test_e6_series(m):
    for s in (1, 2):
        N = e6_rank3(s, m)
        assert N.is_valid()
        assert end_dim(N) == 1 and ext1_dim_hereditary(N, N) == 0
    assert e6_rank3(1, m).dims[0] == 3 * m + 1
    assert e6_rank3(2, m).dims[0] == 3 * m + 2


def test_e6_series2_hub_3m1_layout_is_not_exceptional():
    for m in (1, 2, 3):
        ob = e6_series2_obstruction(m)
        assert ob["euler_form"] == 1 and ob["defect"] == 0
        assert ob["display_end_dim"] == m + 1
        assert ob["generic_end_dim"] >= 2


def test_e6_rejects():
    with pytest.raises(ValueError):
        e6_rank3(3, 1)
    with pytest.raises(ValueError):
        e6_rank3(1, -1)
    with pytest.raises(ValueError):
        e6_rank3(2, 1, variant="other")


def test_family_ids():
    fid = FamilyId.of("dn-rank2", n=5, i=1, j=2, m=1)
    assert str(fid) == "dn-rank2(n=5,i=1,j=2,m=1)"
    assert fid.as_dict() == {"n": 5, "i": 1, "j": 2, "m": 1}
    assert build_family(fid).same_data(dn_rank2(5, 1, 2, 1))
    with pytest.raises(ValueError):
        FamilyId.of("dn-rank2", n=5)
    with pytest.raises(ValueError):
        FamilyId("nope", ())


def test_over_prime_field():
    N = dn_rank2(5, 1, 2, 3, GF(3))
    assert N.field == GF(3) and end_dim(N) == 1
    # -1 entries reduce modulo 3
    assert any(x == 2 for row in N.maps["5->4"].data for x in row)


def test_rendering():
    N = dn_rank2(5, 1, 2, 1)
    text = render_text(N, "title")
    assert text.startswith("title\nquiver D~5 over q\n")
    assert "C [5->4]" in text and "D [6->4]" in text
    assert render_text(N) == render_text(dn_rank2(5, 1, 2, 1))
    letters = matrix_letters(N)
    assert letters["3->1"] == "A" and letters["4->3"] in ("=", "E", "F")
    assert matrix_letters(e6_rank3(1, 1))["6->5"] == "G"
    d = render_json(N, FamilyId.of("dn-rank2", n=5, i=1, j=2, m=1))
    assert d["family"] == {"kind": "dn-rank2", "n": 5, "i": 1, "j": 2, "m": 1}
    assert rep_from_json(json.dumps(d)).same_data(N)


def test_empty_blocks_render():
    text = render_text(dn_rank2(4, 1, 2, 0))
    assert "(1x0 empty)" in text or "(0x0 empty)" in text


def test_closed_form_isomorphism_classes_separate():
    assert find_iso(dn_rank2(5, 1, 2, 1), dn_rank2(5, 1, 2, 1)).found
