import pytest

from tiltrep.errors import UnsupportedType
from tiltrep.quiver import (
    INF,
    build_canonical,
    build_dn,
    build_e6,
    euler_form_hereditary,
    is_domestic,
    path_counts_from,
    projective_dimvec,
)


def test_canonical_shape():
    L = build_canonical(3, 2, 2)
    assert L.vertices == ("0", "1", "2", "1'", "1''", INF)
    assert [a.label for a in L.arrows] == ["alpha1", "alpha2", "alpha3", "beta1", "beta2",
                                           "gamma1", "gamma2"]
    assert L.sources() == ["0"] and L.sinks() == [INF]
    rel = L.relation
    assert rel.gamma == ("gamma1", "gamma2")
    assert rel.alpha == ("alpha1", "alpha2", "alpha3")


def test_canonical_e6_type():
    L = build_canonical(3, 3, 2)
    assert len(L.vertices) == 7 and len(L.arrows) == 8


@pytest.mark.parametrize("triple,expected", [
    ((3, 2, 2), True), ((5, 2, 2), True), ((3, 3, 2), True), ((4, 3, 2), True), ((5, 3, 2), True),
    ((6, 3, 2), False), ((4, 4, 2), False), ((3, 3, 3), False), ((4, 2, 2), True),
])
def test_domestic(triple, expected):
    assert is_domestic(*triple) is expected


def test_bad_canonical():
    with pytest.raises((UnsupportedType, ValueError)):
        build_canonical(1, 2, 2)


def test_dn_arrows():
    Q = build_dn(6)
    assert Q.vertices == (1, 2, 3, 4, 5, 6, 7)
    edges = {(a.source, a.target) for a in Q.arrows}
    assert edges == {(3, 1), (3, 2), (4, 3), (5, 4), (6, 5), (7, 5)}
    with pytest.raises((UnsupportedType, ValueError)):
        build_dn(3)


def test_dn4_is_star():
    Q = build_dn(4)
    assert {(a.source, a.target) for a in Q.arrows} == {(3, 1), (3, 2), (4, 3), (5, 3)}


def test_e6_arrows():
    Q = build_e6()
    assert {(a.source, a.target) for a in Q.arrows} == {(2, 1), (1, 0), (3, 4), (4, 0), (5, 0), (6, 5)}
    assert Q.sinks() == [0]


def test_euler_form_null_root():
    # the minimal imaginary roots are radical vectors of the Tits form
    Q = build_e6()
    delta = (3, 2, 1, 1, 2, 2, 1)
    assert euler_form_hereditary(Q, delta, delta) == 0
    for n in (4, 5, 6, 7):
        Qd = build_dn(n)
        d = (1, 1) + (2,) * (n - 3) + (1, 1)
        assert euler_form_hereditary(Qd, d, d) == 0


def test_euler_form_simple_roots():
    Q = build_dn(5)
    for k in range(len(Q.vertices)):
        e = [0] * len(Q.vertices)
        e[k] = 1
        assert euler_form_hereditary(Q, e, e) == 1


def test_path_counts_hand_computed():
    Q = build_dn(5)
    # paths out of 6: 6->4->3->{1,2}
    assert path_counts_from(Q, 6) == (1, 1, 1, 1, 0, 1)
    assert projective_dimvec(Q, 3) == (1, 1, 1, 0, 0, 0)
    assert projective_dimvec(Q, 1) == (1, 0, 0, 0, 0, 0)


def test_opposite_reverses():
    L = build_canonical(3, 2, 2)
    op = L.opposite()
    assert op.source_vertex == INF and op.sink_vertex == "0"
    for a, b in zip(L.arrows, op.arrows):
        assert (a.source, a.target) == (b.target, b.source)
    assert op.opposite().arrows == L.arrows


def test_describe_and_dict():
    Q = build_dn(4)
    text = Q.describe()
    assert "D~4" in text
    d = Q.to_dict()
    assert d["vertices"] == [1, 2, 3, 4, 5]
