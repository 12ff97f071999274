"""Hom spaces, isomorphism search, exceptionality and Gen(T) membership."""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from itertools import product

from tiltrep.errors import FieldMismatch, InternalInconsistency, UnsupportedAlgebra
from tiltrep.linalg import is_invertible, nullspace, row_space_basis
from tiltrep.quiver import euler_form_hereditary
from tiltrep.rep import Morphism, Representation

ISO_SEED = 20061101
ISO_RANDOM_TRIES = 64
ISO_EXHAUSTIVE_MAX_DIM = 12

FOUND = "found"
NON_ISOMORPHIC = "non-isomorphic"
NOT_FOUND = "not-found"


def _check_pair(X: Representation, Y: Representation):
    if X.quiver != Y.quiver:
        raise ValueError("representations live over different quivers")
    if X.field != Y.field:
        raise FieldMismatch(f"{X.field!r} vs {Y.field!r}")


def _unknown_layout(X: Representation, Y: Representation):
    offsets = {}
    pos = 0
    for v in X.quiver.vertices:
        offsets[v] = pos
        pos += Y.dims[v] * X.dims[v]
    return offsets, pos


def intertwining_system(X: Representation, Y: Representation) -> tuple[list[list], int]:
    """Rows of the linear system ``f_v X(a) - Y(a) f_u = 0`` over all arrows ``a: u -> v``.

    Unknowns are the entries of the ``f_v`` laid out as in :meth:`Morphism.vector`.
    The canonical relation adds no equations: it constrains objects, not maps.
    """
    offsets, n = _unknown_layout(X, Y)
    nm = X.field.normalize
    rows = []
    for a in X.quiver.arrows:
        u, v = a.source, a.target
        xa = X.maps[a.label].data
        ya = Y.maps[a.label].data
        dxu, dxv, dyu, dyv = X.dims[u], X.dims[v], Y.dims[u], Y.dims[v]
        ov, ou = offsets[v], offsets[u]
        for r in range(dyv):
            yrow = ya[r]
            for c in range(dxu):
                row = [0] * n
                for k in range(dxv):
                    coef = xa[k][c]
                    if coef != 0:
                        row[ov + r * dxv + k] += coef
                for k in range(dyu):
                    coef = yrow[k]
                    if coef != 0:
                        row[ou + k * dxu + c] -= coef
                rows.append([nm(x) for x in row])
    return rows, n


@dataclass
class HomBasis:
    source: Representation
    target: Representation
    vectors: list[tuple]
    pivots: list[int]
    morphisms: list[Morphism] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.morphisms)

    def __getitem__(self, i) -> Morphism:
        return self.morphisms[i]

    def combination(self, coeffs) -> Morphism:
        field_ = self.source.field
        n = len(self.vectors[0]) if self.vectors else 0
        acc = [0] * n
        for c, vec in zip(coeffs, self.vectors):
            if c == 0:
                continue
            for k, x in enumerate(vec):
                if x != 0:
                    acc[k] += c * x
        return Morphism.from_vector(self.source, self.target, tuple(field_.normalize(x) for x in acc))

    def coordinates(self, f: Morphism) -> tuple:
        """Coordinates of ``f`` in this basis; raises if ``f`` is outside the span."""
        vec = f.vector()
        coords = tuple(vec[p] for p in self.pivots)
        if self.combination(coords).vector() != vec:
            raise InternalInconsistency("morphism is not in the span of the hom basis")
        return coords


def hom_basis(X: Representation, Y: Representation) -> HomBasis:
    """Echelon-normalized basis of all intertwiners ``X -> Y``."""
    _check_pair(X, Y)
    rows, n = intertwining_system(X, Y)
    vecs = nullspace(X.field, rows, n)
    pivots = []
    for v in vecs:
        pivots.append(next(i for i, x in enumerate(v) if x != 0))
    morphs = [Morphism.from_vector(X, Y, v) for v in vecs]
    return HomBasis(X, Y, vecs, pivots, morphs)


def hom_dim(X: Representation, Y: Representation) -> int:
    _check_pair(X, Y)
    rows, n = intertwining_system(X, Y)
    if not rows:
        return n
    _, piv = row_space_basis(X.field, rows, n)
    return n - len(piv)


def end_dim(X: Representation) -> int:
    return hom_dim(X, X)


@dataclass
class IsoResult:
    verdict: str
    morphism: Morphism | None = None
    reason: str = ""
    seed: int = ISO_SEED
    tries: int = 0

    @property
    def found(self) -> bool:
        return self.verdict == FOUND

    @property
    def proven_non_isomorphic(self) -> bool:
        return self.verdict == NON_ISOMORPHIC

    def checksum(self) -> str:
        """Short digest of the certificate, stable across runs."""
        if self.morphism is None:
            return "-"
        text = ",".join(str(x) for x in self.morphism.vector())
        return hashlib.sha256(text.encode()).hexdigest()[:16]


def _is_iso_combination(f: Morphism) -> bool:
    return all(is_invertible(m) for m in f.comps.values())


def find_iso(X: Representation, Y: Representation, seed: int = ISO_SEED) -> IsoResult:
    """Search for an isomorphism ``X -> Y``.

    Verdicts: ``found`` (certificate attached), ``non-isomorphic`` (proven) or
    ``not-found``.  Search order: the basis element when ``dim Hom = 1``;
    otherwise ``ISO_RANDOM_TRIES`` combinations with coefficients drawn from
    ``random.Random(seed)``, then every 0/1 combination when
    ``dim Hom <= ISO_EXHAUSTIVE_MAX_DIM``.
    """
    _check_pair(X, Y)
    if X.dims != Y.dims:
        return IsoResult(NON_ISOMORPHIC, reason="dimension vectors differ", seed=seed)
    if X.total_dim == 0:
        return IsoResult(FOUND, Morphism.identity(X), reason="zero representation", seed=seed)
    H = hom_basis(X, Y)
    if H.dim == 0:
        return IsoResult(NON_ISOMORPHIC, reason="Hom(X,Y) = 0", seed=seed)
    tries = 0
    if H.dim == 1:
        tries = 1
        if _is_iso_combination(H[0]):
            return IsoResult(FOUND, H[0], reason="generator of 1-dimensional Hom", seed=seed, tries=1)
        # every morphism is a scalar multiple of the generator
        return IsoResult(NON_ISOMORPHIC, reason="1-dimensional Hom without isomorphism",
                         seed=seed, tries=1)
    rng = random.Random(seed)
    char = X.field.characteristic
    for _ in range(ISO_RANDOM_TRIES):
        tries += 1
        if char:
            coeffs = [rng.randrange(char) for _ in range(H.dim)]
        else:
            coeffs = [rng.randint(-7, 7) for _ in range(H.dim)]
        f = H.combination(coeffs)
        if _is_iso_combination(f):
            return IsoResult(FOUND, f, reason="random combination", seed=seed, tries=tries)
    if H.dim <= ISO_EXHAUSTIVE_MAX_DIM:
        for coeffs in product((0, 1), repeat=H.dim):
            tries += 1
            f = H.combination(coeffs)
            if _is_iso_combination(f):
                return IsoResult(FOUND, f, reason="0/1 combination", seed=seed, tries=tries)
    # isomorphic objects have Hom(X,Y), Hom(Y,X), End X, End Y of equal dimension
    if hom_dim(Y, X) != H.dim or end_dim(X) != H.dim or end_dim(Y) != H.dim:
        return IsoResult(NON_ISOMORPHIC, reason="hom dimensions disagree", seed=seed, tries=tries)
    return IsoResult(NOT_FOUND, reason="search exhausted", seed=seed, tries=tries)


def gen_membership(summands, M: Representation) -> bool:
    """True iff the evaluation map from sum_i T_i (x) Hom(T_i, M) onto M is surjective."""
    cols_at = {v: [] for v in M.quiver.vertices}
    for T in summands:
        _check_pair(T, M)
        for f in hom_basis(T, M):
            for v in M.quiver.vertices:
                m = f.comps[v]
                for j in range(m.cols):
                    cols_at[v].append(m.col(j))
    for v in M.quiver.vertices:
        d = M.dims[v]
        if d == 0:
            continue
        if not cols_at[v]:
            return False
        _, piv = row_space_basis(M.field, cols_at[v], d)
        if len(piv) != d:
            return False
    return True


def ext1_dim_hereditary(X: Representation, Y: Representation) -> int:
    """``dim Hom(X,Y) - <dim X, dim Y>`` over a path algebra."""
    _check_pair(X, Y)
    if X.quiver.relation is not None:
        raise UnsupportedAlgebra("Ext^1 via the Euler form needs a path algebra without relations")
    value = hom_dim(X, Y) - euler_form_hereditary(X.quiver, X.dimvec, Y.dimvec)
    if value < 0:
        raise InternalInconsistency("negative Ext^1 dimension")
    return value


def is_exceptional(X: Representation) -> bool:
    return end_dim(X) == 1 and ext1_dim_hereditary(X, X) == 0
