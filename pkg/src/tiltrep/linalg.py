"""Exact dense linear algebra over the rationals and prime fields.

Entries are stored as plain Python values: ``int``/``Fraction`` over Q
(fractions with denominator 1 are collapsed to ``int``) and canonical
``int`` residues in ``[0, p)`` over F_p.  The field tag lives on the matrix.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from tiltrep import _backend
from tiltrep.errors import FieldMismatch, ShapeError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """Base class; concrete fields are :class:`Rationals` and :class:`PrimeField`."""

    characteristic = 0

    def coerce(self, x):
        raise NotImplementedError

    def normalize(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def to_str(self, x) -> str:
        return str(x)

    def parse(self, s: str):
        return self.coerce(Fraction(s))


class Rationals(Field):
    characteristic = 0

    def coerce(self, x):
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        raise TypeError(f"cannot coerce {x!r} to a rational")

    def normalize(self, x):
        if type(x) is Fraction and x.denominator == 1:
            return x.numerator
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.coerce(Fraction(1) / x)

    def div(self, x, y):
        return self.coerce(Fraction(x) / y)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    @property
    def tag(self) -> str:
        return "q"


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def coerce(self, x):
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {x!r} to F_{self.p}")

    def normalize(self, x):
        return x % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def div(self, x, y):
        return x * self.inv(y) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    @property
    def tag(self) -> str:
        return f"fp:{self.p}"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_tag(tag: str) -> Field:
    """Parse ``"q"`` or ``"fp:<p>"``."""
    tag = tag.strip().lower()
    if tag in ("q", "qq"):
        return QQ
    if tag.startswith("fp:"):
        return PrimeField(int(tag[3:]))
    raise ValueError(f"unknown field tag {tag!r}; use 'q' or 'fp:<p>'")


def _rref(field: Field, rows, ncols):
    if field.characteristic == 0:
        return _backend.rref_rational(rows, ncols)
    return _backend.rref_modp(rows, ncols, field.characteristic)


class Matrix:
    """Immutable dense matrix with entries in ``field``."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data: Sequence[Sequence]):
        if rows < 0 or cols < 0:
            raise ShapeError("negative matrix dimension")
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ShapeError(f"data does not have shape {rows}x{cols}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = tuple(tuple(r) for r in data)

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], field: Field = QQ, cols: int | None = None) -> "Matrix":
        data = [[field.coerce(x) for x in r] for r in rows]
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(field, len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> "Matrix":
        return cls(field, rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "Matrix":
        return cls(field, n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, values: Iterable, field: Field = QQ) -> "Matrix":
        return cls.from_rows([[v] for v in values], field, cols=1)

    # -- basic protocol -----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.rows}x{self.cols}, {self.to_lists()!r})"

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.data]

    def entries(self) -> list:
        return [x for r in self.data for x in r]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def _check(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        nm = self.field.normalize
        return Matrix(self.field, self.rows, self.cols,
                      [[nm(a + b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        nm = self.field.normalize
        return Matrix(self.field, self.rows, self.cols, [[nm(-a) for a in r] for r in self.data])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        nm = self.field.normalize
        return Matrix(self.field, self.rows, self.cols, [[nm(c * a) for a in r] for r in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        nm = self.field.normalize
        ocols = other.cols
        odata = other.data
        out = []
        for r in self.data:
            acc = [0] * ocols
            for k, a in enumerate(r):
                if a == 0:
                    continue
                orow = odata[k]
                for j in range(ocols):
                    b = orow[j]
                    if b != 0:
                        acc[j] += a * b
            out.append([nm(x) for x in acc])
        return Matrix(self.field, self.rows, ocols, out)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.cols:
            raise ShapeError("vector length mismatch")
        nm = self.field.normalize
        return tuple(nm(sum(a * b for a, b in zip(r, vec))) for r in self.data)

    # -- block assembly -----------------------------------------------------

    @staticmethod
    def hstack(blocks: Sequence["Matrix"]) -> "Matrix":
        field = blocks[0].field
        rows = blocks[0].rows
        for b in blocks:
            if b.field != field:
                raise FieldMismatch("hstack over mixed fields")
            if b.rows != rows:
                raise ShapeError("hstack row mismatch")
        data = [[x for b in blocks for x in b.data[i]] for i in range(rows)]
        return Matrix(field, rows, sum(b.cols for b in blocks), data)

    @staticmethod
    def vstack(blocks: Sequence["Matrix"]) -> "Matrix":
        field = blocks[0].field
        cols = blocks[0].cols
        for b in blocks:
            if b.field != field:
                raise FieldMismatch("vstack over mixed fields")
            if b.cols != cols:
                raise ShapeError("vstack column mismatch")
        data = [r for b in blocks for r in b.data]
        return Matrix(field, len(data), cols, data)

    @staticmethod
    def block_diag(blocks: Sequence["Matrix"], field: Field = QQ) -> "Matrix":
        if blocks:
            field = blocks[0].field
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            if b.field != field:
                raise FieldMismatch("block_diag over mixed fields")
            for i, row in enumerate(b.data):
                data[r0 + i][c0:c0 + b.cols] = row
            r0 += b.rows
            c0 += b.cols
        return Matrix(field, rows, cols, data)

    # -- elimination-backed -------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        rows, pivots = _rref(self.field, self.data, self.cols)
        return Matrix(self.field, len(rows), self.cols, rows), pivots

    def rank(self) -> int:
        return len(_rref(self.field, self.data, self.cols)[1])

    def inverse(self) -> "Matrix":
        if not is_invertible(self):
            raise ValueError("matrix is not invertible")
        n = self.rows
        aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.data)]
        rows, _ = _rref(self.field, aug, 2 * n)
        return Matrix(self.field, n, n, [r[n:] for r in rows])


def row_space_basis(field: Field, vectors: Sequence[Sequence], length: int) -> tuple[list[tuple], list[int]]:
    """Reduced row echelon basis of the span of ``vectors`` plus its pivot columns."""
    rows, pivots = _rref(field, [list(v) for v in vectors], length)
    return [tuple(r) for r in rows], pivots


def _nullspace_rows(field: Field, data, ncols: int) -> list[tuple]:
    rows, pivots = _rref(field, data, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    nm = field.normalize
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in zip(rows, pivots):
            a = r[fc]
            if a != 0:
                v[pc] = nm(-a)
        basis.append(v)
    if not basis:
        return []
    # canonical form: the unique reduced row echelon basis of the kernel
    canon, _ = _rref(field, basis, ncols)
    return [tuple(r) for r in canon]


def nullspace(field: Field, rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Kernel of the matrix given as a row list; see :func:`kernel_basis`."""
    return _nullspace_rows(field, [list(r) for r in rows], ncols)


def kernel_basis(A: Matrix) -> list[tuple]:
    """Basis of ``{x : A x = 0}``.

    The basis is the reduced row echelon basis of the kernel (equivalently the
    reduced column echelon form of the basis matrix), ordered by pivot, so it
    is uniquely determined by the kernel itself.
    """
    return _nullspace_rows(A.field, A.data, A.cols)


def solve(A: Matrix, b: Sequence):
    """One solution of ``A x = b`` (free variables set to 0), or ``None``.

    ``b`` is a sequence or a one-column Matrix over the same field.
    """
    if isinstance(b, Matrix):
        check_same_field(A, b)
        if b.cols != 1:
            raise ShapeError(f"right-hand side must be a column, got {b.rows}x{b.cols}")
        b = b.col(0)
    if len(b) != A.rows:
        raise ShapeError(f"right-hand side has length {len(b)}, expected {A.rows}")
    field = A.field
    bb = [field.coerce(x) for x in b]
    aug = [list(r) + [x] for r, x in zip(A.data, bb)]
    rows, pivots = _rref(field, aug, A.cols + 1)
    if pivots and pivots[-1] == A.cols:
        return None
    x = [0] * A.cols
    for r, pc in zip(rows, pivots):
        x[pc] = r[A.cols]
    return tuple(x)


def rank(A: Matrix) -> int:
    return A.rank()


def is_invertible(A: Matrix) -> bool:
    return A.rows == A.cols and A.rank() == A.rows


def check_same_field(*mats: Matrix) -> Field:
    field = mats[0].field
    for m in mats[1:]:
        if m.field != field:
            raise FieldMismatch(f"{field!r} vs {m.field!r}")
    return field
