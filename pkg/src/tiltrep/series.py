"""Modules over canonical algebras: block matrices, series and tilting modules."""
from __future__ import annotations

from dataclasses import dataclass, field

from tiltrep.errors import InternalInconsistency, UnsupportedType
from tiltrep.hom import hom_basis
from tiltrep.linalg import QQ, Field, Matrix
from tiltrep.quiver import INF, CanonicalAlgebra, Quiver, build_canonical, build_dn, build_e6
from tiltrep.rep import Morphism, Representation


def x_block(n: int, i: int, field: Field = QQ) -> Matrix:
    """``(n+i) x n``: identity on top of ``i`` zero rows."""
    if n < 0 or i < 0:
        raise ValueError("block sizes must be non-negative")
    return Matrix(field, n + i, n, [[1 if r == c else 0 for c in range(n)] for r in range(n + i)])


def y_block(n: int, i: int, field: Field = QQ) -> Matrix:
    """``(n+i) x n``: ``i`` zero rows on top of the identity."""
    if n < 0 or i < 0:
        raise ValueError("block sizes must be non-negative")
    return Matrix(field, n + i, n, [[1 if r == c + i else 0 for c in range(n)] for r in range(n + i)])


def enlargement(zp: Matrix, m: int) -> Matrix:
    """m-th enlargement of ``zp`` (``r x c`` -> ``(r+m) x (c+m)``).

    New column ``c+k`` carries a 1 in rows ``k`` and ``r+k``; for a one-column
    seed of height ``h`` this gives ``s_1 = r_1 + r_2, ..., s_h = r_1 + r_{h+1}``
    and ``s_l = r_{l-h+1} + r_{l+1}`` beyond.
    """
    if m < 0:
        raise ValueError("enlargement order must be non-negative")
    r, c = zp.shape
    data = [list(row) + [0] * m for row in zp.data] + [[0] * (c + m) for _ in range(m)]
    for k in range(m):
        data[k][c + k] = 1
        data[r + k][c + k] = 1
    return Matrix(zp.field, r + m, c + m, data)


def z_seed(height: int, field: Field = QQ) -> Matrix:
    return Matrix.column([1] * height, field)


def _ident(n: int, field: Field) -> Matrix:
    return Matrix.identity(n, field)


def build_rank2(p: int, i: int, j: int, m: int, field: Field = QQ) -> Representation:
    """Rank-2 series member ``M_m^{(i,j)}`` over the canonical algebra of type (p,2,2)."""
    if not (1 <= i < j <= p):
        raise ValueError(f"need 1 <= i < j <= p, got i={i}, j={j}, p={p}")
    if m < 0:
        raise ValueError("m must be non-negative")
    alg = build_canonical(p, 2, 2)

    def arm_dim(k):
        if k < i:
            return m
        if k < j:
            return m + 1
        return m + 2

    dims = {"0": m, INF: m + 2, "1'": m + 1, "1''": m + 1}
    for k in range(1, p):
        dims[str(k)] = arm_dim(k)
    maps = {}
    for k in range(1, p + 1):
        if k == i:
            maps[f"alpha{k}"] = x_block(m, 1, field)
        elif k == j:
            maps[f"alpha{k}"] = x_block(m + 1, 1, field)
        else:
            maps[f"alpha{k}"] = _ident(arm_dim(k), field)
    maps["beta1"] = y_block(m, 1, field)
    maps["beta2"] = y_block(m + 1, 1, field)
    maps["gamma1"] = y_block(m, 1, field)
    maps["gamma2"] = enlargement(z_seed(2, field), m)
    return Representation(alg, dims, maps, field, name=f"M_{m}^({i},{j})")


def build_e6_rank3_series1(m: int, field: Field = QQ) -> Representation:
    """First rank-3 series over the canonical algebra of type (3,3,2)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    alg = build_canonical(3, 3, 2)
    dims = {"0": m, "1": m + 1, "2": m + 2, "1'": m + 1, "2'": m + 2, "1''": m + 1, INF: m + 3}
    maps = {
        "alpha1": x_block(m, 1, field),
        "alpha2": x_block(m + 1, 1, field),
        "alpha3": x_block(m + 2, 1, field),
        "beta1": y_block(m, 1, field),
        "beta2": y_block(m + 1, 1, field),
        "beta3": y_block(m + 2, 1, field),
        "gamma1": y_block(m, 1, field),
        "gamma2": enlargement(z_seed(3, field), m),
    }
    return Representation(alg, dims, maps, field, name=f"M_{m}")


@dataclass
class Generator:
    source: int
    target: int
    morphism: Morphism
    infinity_matrix: Matrix


@dataclass
class TiltingData:
    """Summands ``T_i`` of a tilting module and generators of the nonzero ``Hom(T_i, T_j)``.

    ``quiver`` is the path-algebra quiver whose opposite is ``End(T)``;
    ``vertex_map`` sends each of its vertices to a summand index.  An arrow
    ``u -> v`` of ``quiver`` corresponds to the generator
    ``T[vertex_map[v]] -> T[vertex_map[u]]``.
    """

    name: str
    algebra: CanonicalAlgebra
    summands: dict[int, Representation]
    generators: list[Generator] = field(default_factory=list)
    quiver: Quiver | None = None
    vertex_map: dict = field(default_factory=dict)

    def generator(self, i: int, j: int) -> Generator | None:
        for g in self.generators:
            if g.source == i and g.target == j:
                return g
        return None

    def summand_list(self) -> list[Representation]:
        return [self.summands[k] for k in sorted(self.summands)]


def generator_from_infinity(Ti: Representation, Tj: Representation, s_inf: Matrix) -> Morphism:
    """The morphism ``Ti -> Tj`` whose component at infinity is ``s_inf``.

    Requires ``Hom(Ti, Tj)`` to be 1-dimensional; the basis element is rescaled.
    """
    H = hom_basis(Ti, Tj)
    if H.dim != 1:
        raise InternalInconsistency(f"expected 1-dimensional Hom, got dimension {H.dim}")
    b = H[0]
    b_inf = b.comps[INF]
    if b_inf.shape != s_inf.shape:
        raise InternalInconsistency("generator matrix has the wrong shape")
    nz = [(r, c) for r in range(b_inf.rows) for c in range(b_inf.cols) if b_inf[r, c] != 0]
    if not nz:
        raise InternalInconsistency("generator vanishes at infinity")
    r, c = nz[0]
    scale = Ti.field.div(s_inf[r, c], b_inf[r, c])
    g = b.scale(scale)
    if g.comps[INF] != s_inf:
        raise InternalInconsistency("prescribed matrix at infinity is not in Hom(Ti, Tj)")
    return g


def _mat(rows, field):
    return Matrix.from_rows(rows, field)


def _tilting(name, alg, summands, gens, quiver, vertex_map, field):
    out = []
    for i, j, rows in gens:
        s = _mat(rows, field)
        out.append(Generator(i, j, generator_from_infinity(summands[i], summands[j], s), s))
    return TiltingData(name, alg, summands, out, quiver, vertex_map)


def build_tilting_dn(n: int, field: Field = QQ) -> TiltingData:
    """Tilting module over the (n-2,2,2) canonical algebra with End(T) = (K D~_n)^op."""
    if n < 4:
        raise UnsupportedType(f"D~_n needs n >= 4, got {n}")
    p = n - 2
    alg = build_canonical(p, 2, 2)
    one = _ident(1, field)
    arm = [str(a) for a in range(1, p)]

    def summand(dims, maps, label):
        return Representation(alg, dims, maps, field, name=label)

    T = {}
    T[1] = summand({"1'": 1, INF: 1}, {"beta2": one}, "T_1")
    T[2] = summand({"1''": 1, INF: 1}, {"gamma2": one}, "T_2")
    for k in range(3, n):
        zeros = n - k - 1
        dims = {"1'": 1, "1''": 1, INF: 2}
        maps = {"beta2": y_block(1, 1, field), "gamma2": z_seed(2, field),
                f"alpha{p}": x_block(1, 1, field)}
        for a in range(1, p):
            dims[str(a)] = 0 if a <= zeros else 1
        for a in range(2, p):
            if a - 1 > zeros:
                maps[f"alpha{a}"] = one
        T[k] = summand(dims, maps, f"T_{k}")
    T[n] = summand({"1'": 1, "1''": 1, INF: 1}, {"beta2": one, "gamma2": one}, f"T_{n}")
    dims = {v: 1 for v in ["0", *arm, "1'", "1''"]}
    dims[INF] = 2
    maps = {f"alpha{a}": one for a in range(1, p)}
    maps.update({f"alpha{p}": x_block(1, 1, field), "beta1": one, "beta2": y_block(1, 1, field),
                 "gamma1": one, "gamma2": z_seed(2, field)})
    T[n + 1] = summand(dims, maps, f"T_{n + 1}")

    gens = [(1, 3, [[0], [1]]), (2, 3, [[1], [1]])]
    gens += [(k, k + 1, [[1, 0], [0, 1]]) for k in range(3, n - 1)]
    gens += [(n - 1, n, [[0, 1]]), (n - 1, n + 1, [[1, 0], [0, 1]])]
    gamma = build_dn(n)
    return _tilting(f"T(D~{n})", alg, T, gens, gamma, {v: v for v in gamma.vertices}, field)


# Gamma vertex -> summand index; the summands labelled 3 and 4 sit at Gamma's 4 and 3
E6_VERTEX_MAP = {0: 0, 1: 1, 2: 2, 3: 4, 4: 3, 5: 5, 6: 6}


def build_tilting_e6(field: Field = QQ) -> TiltingData:
    """Tilting module over the (3,3,2) canonical algebra with End(T) = (K E~_6)^op."""
    alg = build_canonical(3, 3, 2)
    one = _ident(1, field)
    i2 = _ident(2, field)
    X = lambda n: x_block(n, 1, field)  # noqa: E731
    Y = lambda n: y_block(n, 1, field)  # noqa: E731

    specs = {
        0: ({"1": 1, "2": 2, "1'": 1, "2'": 2, "1''": 1, INF: 3},
            {"alpha2": X(1), "alpha3": X(2), "beta2": Y(1), "beta3": Y(2), "gamma2": z_seed(3, field)}),
        1: ({"2": 1, "1'": 1, "2'": 2, "1''": 1, INF: 2},
            {"alpha3": X(1), "beta2": Y(1), "beta3": i2, "gamma2": z_seed(2, field)}),
        2: ({"2": 1, "1'": 1, "2'": 1, INF: 1},
            {"alpha3": one, "beta2": one, "beta3": one}),
        3: ({"1": 1, "2": 2, "2'": 1, "1''": 1, INF: 2},
            {"alpha2": X(1), "alpha3": i2, "beta3": Y(1), "gamma2": z_seed(2, field)}),
        4: ({"1": 1, "2": 1, "2'": 1, INF: 1},
            {"alpha2": one, "alpha3": one, "beta3": one}),
        5: ({"1": 1, "2": 1, "1'": 1, "2'": 1, "1''": 1, INF: 2},
            {"alpha2": one, "alpha3": X(1), "beta2": one, "beta3": Y(1), "gamma2": z_seed(2, field)}),
        6: ({"0": 1, "1": 1, "2": 1, "1'": 1, "2'": 1, "1''": 1, INF: 2},
            {"alpha1": one, "alpha2": one, "alpha3": X(1), "beta1": one, "beta2": one,
             "beta3": Y(1), "gamma1": one, "gamma2": z_seed(2, field)}),
    }
    T = {k: Representation(alg, d, mp, field, name=f"T_{k}") for k, (d, mp) in specs.items()}
    gens = [
        (0, 1, [[0, 1, 0], [0, 0, 1]]),
        (1, 2, [[1, -1]]),
        (0, 3, [[1, 0, 0], [0, 1, 0]]),
        (3, 4, [[1, -1]]),
        (0, 5, [[1, 0, 0], [0, 0, 1]]),
        (5, 6, [[1, 0], [0, 1]]),
    ]
    return _tilting("T(E~6)", alg, T, gens, build_e6(), dict(E6_VERTEX_MAP), field)
