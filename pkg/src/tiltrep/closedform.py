"""Closed-form matrix families for D~_n and E~_6 representations.

Block layouts are fixed by the target dimensions: each matrix is written as a
list of identity blocks (``place``) and explicit rows.  Chain positions follow
the dimension-vector map: on D~_n the chain vertex ``v`` (3 <= v <= n-1) sees
the arm growth at ``alpha_i`` between ``n-i`` and ``n-i+1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from tiltrep.errors import ShapeError
from tiltrep.linalg import QQ, Field, Matrix
from tiltrep.quiver import build_dn, build_e6
from tiltrep.rep import Representation, apply_graph_symmetry, dn_symmetry

PERIODS = {
    "v4": (-1, 1, 1, -1),
    "e6_row1": (-1, 1, 0, 1, -1, 0),
    "e6_row2": (-1, 0, 1, 1, 0, -1),
    "alt": (1, -1),
}


def periodic_sign_vector(kind: str, length: int) -> tuple[int, ...]:
    try:
        period = PERIODS[kind]
    except KeyError:
        raise ValueError(f"unknown periodic vector {kind!r}; choose from {sorted(PERIODS)}") from None
    if length < 0:
        raise ValueError("length must be non-negative")
    return tuple(period[k % len(period)] for k in range(length))


def block_matrix(rows: int, cols: int, items: Sequence, field: Field = QQ) -> Matrix:
    """Assemble a ``rows x cols`` matrix.

    ``items`` holds ``("I", r0, c0, size, sign)`` identity blocks and
    ``("row", r, c0, values)`` explicit row segments.  An empty matrix takes
    no blocks at all; otherwise a negative block size or anything reaching
    outside the matrix raises ``ShapeError``.
    """
    if rows < 0 or cols < 0:
        raise ShapeError(f"negative matrix shape {rows}x{cols}")
    data = [[0] * cols for _ in range(rows)]
    for item in (items if rows and cols else ()):
        if item[0] == "I":
            _, r0, c0, size, sign = item
            if size < 0:
                raise ShapeError(f"negative identity block I_{size}")
            if size and (r0 < 0 or c0 < 0 or r0 + size > rows or c0 + size > cols):
                raise ShapeError(f"I_{size} at ({r0},{c0}) does not fit a {rows}x{cols} matrix")
            for k in range(size):
                data[r0 + k][c0 + k] = sign
        elif item[0] == "row":
            _, r, c0, values = item
            if not values:
                continue
            if not (0 <= r < rows) or c0 < 0 or c0 + len(values) > cols:
                raise ShapeError(f"row segment at ({r},{c0}) does not fit a {rows}x{cols} matrix")
            for k, x in enumerate(values):
                data[r][c0 + k] = x
        else:
            raise ValueError(f"unknown block item {item[0]!r}")
    return Matrix.from_rows(data, field, cols=cols)


def _I(r0, c0, size, sign=1):
    return ("I", r0, c0, size, sign)


# -- D~_n ------------------------------------------------------------------

def _chain_dims(n: int, i: int, high: int, low: int) -> dict:
    return {v: (high if v <= n - i else low) for v in range(3, n)}


def _dn_chain_maps(n: int, dims: dict, split, field: Field) -> dict:
    """Maps on the chain arrows ``v+1 -> v``: identity, or a drop by one.

    A drop from ``d`` to ``d-1`` is ``[[I_h; 0], 0; 0, I_(d-1-h)]`` with the
    zero row after the first ``h = split(d)`` rows.
    """
    maps = {}
    for v in range(3, n - 1):
        d_hi, d_lo = dims[v], dims[v + 1]
        if d_hi == d_lo:
            maps[f"{v + 1}->{v}"] = Matrix.identity(d_hi, field)
        elif d_hi == d_lo + 1:
            h = split(d_hi)
            maps[f"{v + 1}->{v}"] = block_matrix(d_hi, d_lo, [_I(0, 0, h), _I(h + 1, h, d_lo - h)], field)
        else:
            raise ShapeError(f"chain dimensions {d_hi}, {d_lo} differ by more than one")
    return maps


def dn_rank2(n: int, i: int, j: int, m: int, field: Field = QQ) -> Representation:
    """Closed form ``N_m^{(i,j)}`` over D~_n, cases (a)-(d) by whether i = 1 and j = n-2."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    if not (1 <= i < j <= n - 2):
        raise ValueError(f"need 1 <= i < j <= n-2 = {n - 2}, got i={i}, j={j}")
    if m < 0:
        raise ValueError("m must be non-negative")
    Q = build_dn(n)
    chain = {}
    for v in range(3, n):
        chain[v] = 2 * m + 2 if v <= n - j else (2 * m + 1 if v <= n - i else 2 * m)
    dims = {1: m + 1, 2: m + 1, n: m, n + 1: m, **chain}
    d3, dl = chain[3], chain[n - 1]
    maps = {"3->1": block_matrix(m + 1, d3, [_I(0, d3 - (m + 1), m + 1)], field)}
    if d3 == 2 * m + 2:
        maps["3->2"] = block_matrix(m + 1, d3, [_I(0, 0, m + 1), _I(0, m + 1, m + 1)], field)
    else:
        maps["3->2"] = block_matrix(m + 1, d3, [_I(0, 0, m), _I(0, m, m + 1)], field)
    maps.update(_dn_chain_maps(n, dims, lambda d: d // 2 - 1, field))
    v = periodic_sign_vector("v4", m)
    maps[f"{n}->{n - 1}"] = block_matrix(dl, m, [("row", dl - m - 1, 0, v), _I(dl - m, 0, m)], field)
    maps[f"{n + 1}->{n - 1}"] = block_matrix(dl, m, [_I(0, 1, m - 1), _I(dl - m, 0, m)], field)
    return Representation(Q, dims, maps, field, name=f"N_{m}^({i},{j})")


def _dn_rank1_type1(n: int, i: int, m: int, field: Field) -> Representation:
    Q = build_dn(n)
    chain = _chain_dims(n, i, 2 * m + 1, 2 * m)
    dims = {1: m, 2: m + 1, n: m, n + 1: m, **chain}
    d3, dl = chain[3], chain[n - 1]
    maps = {"3->1": block_matrix(m, d3, [_I(0, d3 - m, m)], field)}
    if d3 == 2 * m + 1:
        maps["3->2"] = block_matrix(m + 1, d3, [_I(0, 0, m + 1), _I(1, m + 1, m)], field)
    else:
        maps["3->2"] = block_matrix(m + 1, d3, [_I(0, 0, m), _I(1, m, m)], field)
    maps.update(_dn_chain_maps(n, dims, lambda d: m, field))
    maps[f"{n}->{n - 1}"] = block_matrix(dl, m, [_I(dl - m, 0, m)], field)
    maps[f"{n + 1}->{n - 1}"] = block_matrix(dl, m, [_I(0, 0, m), _I(dl - m, 0, m)], field)
    return Representation(Q, dims, maps, field, name=f"(1)N_{m}^({i})")


def _dn_rank1_type2(n: int, i: int, m: int, field: Field) -> Representation:
    Q = build_dn(n)
    chain = _chain_dims(n, i, 2 * m + 2, 2 * m + 1)
    dims = {1: m + 1, 2: m + 1, n: m + 1, n + 1: m, **chain}
    d3, dl = chain[3], chain[n - 1]
    maps = {"3->1": block_matrix(m + 1, d3, [_I(0, d3 - (m + 1), m + 1)], field)}
    if d3 == 2 * m + 2:
        maps["3->2"] = block_matrix(m + 1, d3, [_I(0, 0, m + 1), _I(0, m + 1, m + 1)], field)
    else:
        maps["3->2"] = block_matrix(m + 1, d3, [_I(0, 0, m), _I(0, m, m + 1)], field)
    maps.update(_dn_chain_maps(n, dims, lambda d: m, field))
    maps[f"{n}->{n - 1}"] = block_matrix(dl, m + 1, [_I(dl - m - 1, 0, m + 1)], field)
    maps[f"{n + 1}->{n - 1}"] = block_matrix(dl, m, [_I(0, 0, m), _I(dl - m, 0, m)], field)
    return Representation(Q, dims, maps, field, name=f"(2)N_{m}^({i})")


def dn_rank1(type_: int, i: int, m: int, n: int, field: Field = QQ) -> Representation:
    """Rank-1 family of the given type (1..4); ``i`` is the arm position of the dimension growth.

    Types 1 and 2 are explicit; type 4 is type 1 with vertices 1, 2 swapped and
    type 3 is type 2 at ``m - 1`` with vertices n, n+1 swapped.
    """
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    if type_ not in (1, 2, 3, 4):
        raise ValueError(f"type must be 1..4, got {type_}")
    if not (1 <= i <= n - 2):
        raise ValueError(f"need 1 <= i <= n-2 = {n - 2}, got {i}")
    if m < 0 or (type_ == 3 and m < 1):
        raise ValueError(f"type {type_} needs m >= {1 if type_ == 3 else 0}, got {m}")
    if type_ == 1:
        return _dn_rank1_type1(n, i, m, field)
    if type_ == 2:
        return _dn_rank1_type2(n, i, m, field)
    if type_ == 4:
        N = apply_graph_symmetry(_dn_rank1_type1(n, i, m, field), dn_symmetry(n, "swap12"))
    else:
        N = apply_graph_symmetry(_dn_rank1_type2(n, i, m - 1, field), dn_symmetry(n, "swapn"))
    N.name = f"({type_})N_{m}^({i})"
    return N


# -- dimension vectors -----------------------------------------------------

def dimvec_map_f(n: int, a: Sequence[int]) -> tuple[int, ...]:
    """Image of a (n-2,2,2)-module dimension vector in D~_n vertex order 1..n+1.

    Input order: ``a_0, a_1..a_{n-3}, a_1', a_1'', a_inf``.  With
    ``x = a_1' + a_1'' - a_inf`` the image is ``a_1', a_1''`` at 1, 2,
    ``a_{n-v} + x`` at chain vertex v, ``x`` at n and ``a_0`` at n+1.
    """
    a = [int(t) for t in a]
    if len(a) != n + 1:
        raise ShapeError(f"expected {n + 1} entries, got {len(a)}")
    a0, arm, a1p, a1pp, ac = a[0], a[1:n - 2], a[n - 2], a[n - 1], a[n]
    x = a1p + a1pp - ac
    chain = [arm[n - v - 1] + x for v in range(3, n)]
    return (a1p, a1pp, *chain, x, a0)


def canonical_dimvec(M: Representation) -> tuple[int, ...]:
    """Dimension vector of a (p,2,2)-module in the order used by :func:`dimvec_map_f`."""
    Q = M.quiver
    arm = [M.dims[str(k)] for k in range(1, Q.p)]
    return (M.dims["0"], *arm, M.dims["1'"], M.dims["1''"], M.dims[Q.sink_vertex])


RANK1_TABLE = {
    # type: (a_1', a_1'', a_inf) as offsets from m; arm and a_0 are shared
    1: (0, 1, 1),
    2: (1, 1, 1),
    3: (0, 0, 1),
    4: (1, 0, 1),
}

RANK1_IMAGES = {
    # type: (vertex 1, vertex 2, chain high, chain low, vertex n, vertex n+1) as (coef of m, const)
    1: ((1, 0), (1, 1), (2, 1), (2, 0), (1, 0), (1, 0)),
    2: ((1, 1), (1, 1), (2, 2), (2, 1), (1, 1), (1, 0)),
    3: ((1, 0), (1, 0), (2, 0), (2, -1), (1, -1), (1, 0)),
    4: ((1, 1), (1, 0), (2, 1), (2, 0), (1, 0), (1, 0)),
}


def rank1_lambda_dimvec(type_: int, i: int, m: int, n: int) -> tuple[int, ...]:
    """Tabulated dimension vector of the rank-1 (n-2,2,2)-module of the given type."""
    p1, p2, pc = RANK1_TABLE[type_]
    arm = [m if k < i else m + 1 for k in range(1, n - 2)]
    return (m, *arm, m + p1, m + p2, m + pc)


def rank1_tabulated_image(type_: int, i: int, m: int, n: int) -> tuple[int, ...]:
    """Tabulated image column of the rank-1 table, in D~_n vertex order."""
    ev = [c * m + k for c, k in RANK1_IMAGES[type_]]
    chain = [ev[2] if v <= n - i else ev[3] for v in range(3, n)]
    return (ev[0], ev[1], *chain, ev[4], ev[5])


# -- E~_6 ------------------------------------------------------------------

def _e6_series1(m: int, field: Field) -> Representation:
    Q = build_e6()
    dims = {0: 3 * m + 1, 1: 2 * m, 2: m, 3: m, 4: 2 * m, 5: 2 * m, 6: m}
    hub = 3 * m + 1
    r1 = periodic_sign_vector("e6_row1", m)
    r2 = periodic_sign_vector("e6_row2", m)
    # the half rows run over w_(4..m+2, 1) then w_(3..m+3, 2); at m = 0 A is empty
    half1 = list(periodic_sign_vector("e6_row1", m - 1)) + [0] + list(r1) if m else []
    half2 = list(periodic_sign_vector("e6_row2", m - 1)) + [-1] + list(r2) if m else []
    maps = {
        "1->0": block_matrix(hub, 2 * m, [
            ("row", m - 1, 0, half1), ("row", m, 0, half2),
            _I(m + 1, 0, m - 1), _I(2 * m, m - 1, m + 1)], field),
        "2->1": block_matrix(2 * m, m, [_I(0, 1, m - 1), _I(m - 1, 0, m, -1)], field),
        "4->0": block_matrix(hub, 2 * m, [_I(0, 0, m - 1), _I(m - 1, m - 1, m + 1)], field),
        "3->4": block_matrix(2 * m, m, [_I(0, 1, m - 1), _I(m - 1, 0, m, -1)], field),
        "5->0": block_matrix(hub, 2 * m, [_I(0, 0, m - 1), _I(2 * m, m - 1, m + 1)], field),
        # at m = 1 the top block I_(m-2) is absent and the two zero rows shrink to one
        "6->5": block_matrix(2 * m, m, [_I(0, 2, max(m - 2, 0)), _I(m, 0, m)], field),
    }
    return Representation(Q, dims, maps, field, name=f"N_{m}")


def _e6_series2(m: int, field: Field, variant: str) -> Representation:
    # A hub K^(3m+1) gives dimension vector m*delta + (1;1,1,1;0,0,0),
    # which has defect 0 and admits no exceptional representation.  With one
    # more hub row every zero block has the size forced by its neighbours and
    # the result is exceptional of defect -3, like the first series.
    Q = build_e6()
    extra = 1 if variant == "exceptional" else 0
    hub, mid = 3 * m + 1 + extra, 2 * m + 1
    dims = {0: hub, 1: mid, 2: m, 3: m, 4: mid, 5: mid, 6: m}
    alt = list(periodic_sign_vector("alt", m)) + list(periodic_sign_vector("alt", m + 1))
    z = m - 1 + extra
    maps = {
        "1->0": block_matrix(hub, mid, [_I(0, 0, m), _I(m, m, m + 1)], field),
        "2->1": block_matrix(mid, m, [_I(0, 0, m), _I(m, 0, m, -1)], field),
        "4->0": block_matrix(hub, mid, [_I(0, 0, m), _I(hub - m - 1, m, m + 1)], field),
        "3->4": block_matrix(mid, m, [_I(0, 1, m - 1), _I(m + 1, 0, m)], field),
        "5->0": block_matrix(hub, mid, [("row", z, 0, alt), _I(z + 1, 0, m),
                                        _I(hub - m - 1, m, m + 1)], field),
        "6->5": block_matrix(mid, m, [_I(0, 0, m), _I(m, 0, m, -1)], field),
    }
    return Representation(Q, dims, maps, field, name=f"N'_{m}")


E6_SERIES2_VARIANTS = ("exceptional", "display")


def e6_rank3(series: int, m: int, field: Field = QQ, variant: str = "exceptional") -> Representation:
    """Rank-3 closed forms over E~_6.

    Series 1 has hub dimension 3m+1.  Series 2 defaults to hub 3m+2, the only
    size for which these blocks are exceptional; ``variant="display"``
    keeps the hub K^(3m+1), which yields an indecomposable regular
    representation with ``dim End = m+1``.
    """
    if series not in (1, 2):
        raise ValueError(f"series must be 1 or 2, got {series}")
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if series == 2 and variant not in E6_SERIES2_VARIANTS:
        raise ValueError(f"unknown series-2 variant {variant!r}; choose from {E6_SERIES2_VARIANTS}")
    try:
        return _e6_series1(m, field) if series == 1 else _e6_series2(m, field, variant)
    except ShapeError as exc:
        raise ValueError(f"series {series} has no member at m={m}: {exc}") from None


# -- family ids and rendering -----------------------------------------------

FAMILY_PARAMS = {
    "dn-rank2": ("n", "i", "j", "m"),
    "dn-rank1": ("type", "i", "m", "n"),
    "e6-rank3": ("series", "m"),
}


@dataclass(frozen=True)
class FamilyId:
    kind: str
    params: tuple

    def __post_init__(self):
        if self.kind not in FAMILY_PARAMS:
            raise ValueError(f"unknown family {self.kind!r}; choose from {sorted(FAMILY_PARAMS)}")
        if len(self.params) != len(FAMILY_PARAMS[self.kind]):
            raise ValueError(f"{self.kind} takes parameters {FAMILY_PARAMS[self.kind]}")

    @classmethod
    def of(cls, kind: str, **kw) -> "FamilyId":
        names = FAMILY_PARAMS.get(kind)
        if names is None:
            raise ValueError(f"unknown family {kind!r}; choose from {sorted(FAMILY_PARAMS)}")
        missing = [k for k in names if kw.get(k) is None]
        if missing:
            raise ValueError(f"{kind} needs {', '.join('--' + k for k in missing)}")
        return cls(kind, tuple(int(kw[k]) for k in names))

    def as_dict(self) -> dict:
        return dict(zip(FAMILY_PARAMS[self.kind], self.params))

    def __str__(self):
        inner = ",".join(f"{k}={v}" for k, v in self.as_dict().items())
        return f"{self.kind}({inner})"


def build_family(fid: FamilyId, field: Field = QQ) -> Representation:
    p = fid.as_dict()
    if fid.kind == "dn-rank2":
        return dn_rank2(p["n"], p["i"], p["j"], p["m"], field=field)
    if fid.kind == "dn-rank1":
        return dn_rank1(p["type"], p["i"], p["m"], p["n"], field=field)
    return e6_rank3(p["series"], p["m"], field=field)


E6_LETTERS = {"1->0": "A", "2->1": "B", "4->0": "C", "3->4": "D", "5->0": "E", "6->5": "G"}


def matrix_letters(N: Representation) -> dict:
    """Display names for the arrows of a D~_n or E~_6 representation.

    Chain arrows on D~_n are ``=`` when square, else ``E`` / ``F`` for a drop
    from an even / odd dimension.
    """
    Q = N.quiver
    if Q.name.startswith("E~6"):
        return dict(E6_LETTERS)
    if not Q.name.startswith("D~"):
        return {}
    n = len(Q.vertices) - 1
    out = {"3->1": "A", "3->2": "B", f"{n}->{n - 1}": "C", f"{n + 1}->{n - 1}": "D"}
    for v in range(3, n - 1):
        d_hi, d_lo = N.dims[v], N.dims[v + 1]
        out[f"{v + 1}->{v}"] = "=" if d_hi == d_lo else ("E" if d_hi % 2 == 0 else "F")
    return out


def render_matrix(M: Matrix) -> list[str]:
    if M.rows == 0 or M.cols == 0:
        return [f"({M.rows}x{M.cols} empty)"]
    cells = [[M.field.to_str(x) for x in row] for row in M.data]
    width = max(len(c) for row in cells for c in row)
    return [" ".join(c.rjust(width) for c in row) for row in cells]


def render_text(N: Representation, title: str = "") -> str:
    """Aligned plain text: dimension vector, then one block per arrow."""
    letters = matrix_letters(N)
    lines = []
    if title:
        lines.append(title)
    lines.append(f"quiver {N.quiver.name} over {N.field.tag}")
    lines.append("dims " + " ".join(f"{v}:{N.dims[v]}" for v in N.quiver.vertices))
    for a in N.quiver.arrows:
        M = N.maps[a.label]
        tag = letters.get(a.label)
        head = f"{tag} " if tag else ""
        lines.append("")
        lines.append(f"{head}[{a.label}] {M.rows}x{M.cols}")
        lines.extend("  " + row for row in render_matrix(M))
    return "\n".join(lines) + "\n"


def render_json(N: Representation, fid: FamilyId | None = None) -> dict:
    d = N.to_dict()
    if fid is not None:
        d["family"] = {"kind": fid.kind, **fid.as_dict()}
    return d
