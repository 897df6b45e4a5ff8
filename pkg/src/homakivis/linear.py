"""Exact linear and multilinear algebra over the rationals.

Scalars are ``fractions.Fraction``: arbitrary precision, always reduced,
never rounded.  Vectors, square matrices and the rank-3/rank-4
structure-constant tensors below are immutable after construction, so
every operation in this module is a pure function.

Conventions: basis indices are 0-based everywhere; a ``LinearMap`` is a
square matrix whose column ``j`` is the image of basis vector ``e_j``;
a ``BilinearMap`` stores ``c[i][j][k]`` with ``mu(e_i, e_j) =
sum_k c[i][j][k] e_k`` and a ``TrilinearMap`` is the rank-4 analogue.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionMismatch(ValueError):
    """Operands live in spaces of different dimensions."""


class NotInvertible(ValueError):
    """The matrix is singular over the rationals."""


def _check_dims(*dims: int) -> int:
    first = dims[0]
    for d in dims[1:]:
        if d != first:
            raise DimensionMismatch(f"dimension mismatch: {dims}")
    return first


class Vector:
    """Immutable coordinate vector with Fraction entries."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable) -> None:
        self.coords = tuple(Fraction(c) for c in coords)
        if not self.coords:
            raise ValueError("vector dimension must be positive")

    @classmethod
    def _raw(cls, coords: tuple) -> Vector:
        v = object.__new__(cls)
        v.coords = coords
        return v

    @classmethod
    def zero(cls, dim: int) -> Vector:
        return cls._raw((ZERO,) * dim)

    @classmethod
    def basis(cls, dim: int, i: int) -> Vector:
        return cls._raw(tuple(ONE if k == i else ZERO for k in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: Vector) -> Vector:
        _check_dims(self.dim, other.dim)
        return Vector._raw(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Vector) -> Vector:
        _check_dims(self.dim, other.dim)
        return Vector._raw(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Vector:
        return Vector._raw(tuple(-a for a in self.coords))

    def scale(self, factor) -> Vector:
        f = Fraction(factor)
        return Vector._raw(tuple(f * a for a in self.coords))

    __mul__ = scale
    __rmul__ = scale

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Vector) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return "Vector(%s)" % (", ".join(str(c) for c in self.coords))


class LinearMap:
    """Square matrix over the rationals; column j is the image of e_j."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]) -> None:
        self.rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(self.rows)
        if n == 0 or any(len(row) != n for row in self.rows):
            raise ValueError("matrix must be square and nonempty")

    @classmethod
    def _raw(cls, rows: tuple) -> LinearMap:
        m = object.__new__(cls)
        m.rows = rows
        return m

    @classmethod
    def identity(cls, dim: int) -> LinearMap:
        return cls._raw(tuple(tuple(ONE if i == j else ZERO for j in range(dim))
                              for i in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> LinearMap:
        return cls._raw(((ZERO,) * dim,) * dim)

    @classmethod
    def from_columns(cls, columns: Sequence[Vector]) -> LinearMap:
        dim = _check_dims(len(columns), *(c.dim for c in columns))
        return cls._raw(tuple(tuple(columns[j].coords[i] for j in range(dim))
                              for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> Vector:
        return Vector._raw(tuple(row[j] for row in self.rows))

    def apply(self, x: Vector) -> Vector:
        _check_dims(self.dim, x.dim)
        return Vector._raw(tuple(
            sum((r * c for r, c in zip(row, x.coords) if c), ZERO)
            for row in self.rows))

    def is_identity(self) -> bool:
        return self == LinearMap.identity(self.dim)

    def power(self, k: int) -> LinearMap:
        if k < 0:
            raise ValueError("negative power; use invert() first")
        out = LinearMap.identity(self.dim)
        for _ in range(k):
            out = compose(self, out)
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearMap) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "LinearMap(%r)" % ([[str(x) for x in row] for row in self.rows],)


class BilinearMap:
    """Rank-3 structure-constant tensor for a bilinear product."""

    __slots__ = ("c",)

    def __init__(self, c: Sequence[Sequence[Sequence]]) -> None:
        self.c = tuple(tuple(tuple(Fraction(x) for x in row) for row in plane)
                       for plane in c)
        n = len(self.c)
        if n == 0 or any(len(p) != n for p in self.c) or \
                any(len(r) != n for p in self.c for r in p):
            raise ValueError("tensor must have shape dim x dim x dim")

    @classmethod
    def _raw(cls, c: tuple) -> BilinearMap:
        b = object.__new__(cls)
        b.c = c
        return b

    @classmethod
    def zero(cls, dim: int) -> BilinearMap:
        return cls._raw((((ZERO,) * dim,) * dim,) * dim)

    @classmethod
    def from_products(cls, dim: int, products: dict) -> BilinearMap:
        """Build from a sparse {(i, j): coords-or-Vector} table; rest is zero."""
        c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), val in products.items():
            coords = val.coords if isinstance(val, Vector) else val
            if len(coords) != dim:
                raise DimensionMismatch(f"product ({i},{j}) has wrong length")
            c[i][j] = [Fraction(x) for x in coords]
        return cls(c)

    @property
    def dim(self) -> int:
        return len(self.c)

    def on_basis(self, i: int, j: int) -> Vector:
        return Vector._raw(self.c[i][j])

    def postcompose(self, a: LinearMap) -> BilinearMap:
        """Tensor of ``a`` composed after the product (x, y) -> a(mu(x, y))."""
        _check_dims(self.dim, a.dim)
        return BilinearMap._raw(tuple(
            tuple(a.apply(self.on_basis(i, j)).coords for j in range(self.dim))
            for i in range(self.dim)))

    def is_skew(self) -> bool:
        n = self.dim
        return all(self.c[i][j][k] == -self.c[j][i][k]
                   for i in range(n) for j in range(i, n) for k in range(n))

    def entries(self) -> Iterator[tuple]:
        """Nonzero entries as (i, j, k, coefficient), lexicographic order."""
        for i, plane in enumerate(self.c):
            for j, row in enumerate(plane):
                for k, x in enumerate(row):
                    if x:
                        yield i, j, k, x

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BilinearMap) and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __repr__(self) -> str:
        return f"BilinearMap(dim={self.dim})"


class TrilinearMap:
    """Rank-4 structure-constant tensor for a ternary operation."""

    __slots__ = ("d",)

    def __init__(self, d: Sequence) -> None:
        self.d = tuple(tuple(tuple(tuple(Fraction(x) for x in row) for row in plane)
                             for plane in cube) for cube in d)
        n = len(self.d)
        ok = n > 0 and all(len(cube) == n for cube in self.d) and \
            all(len(p) == n for cube in self.d for p in cube) and \
            all(len(r) == n for cube in self.d for p in cube for r in p)
        if not ok:
            raise ValueError("tensor must have shape dim x dim x dim x dim")

    @classmethod
    def _raw(cls, d: tuple) -> TrilinearMap:
        t = object.__new__(cls)
        t.d = d
        return t

    @classmethod
    def zero(cls, dim: int) -> TrilinearMap:
        return cls._raw(((((ZERO,) * dim,) * dim,) * dim,) * dim)

    @classmethod
    def from_basis_values(cls, dim: int, value: Callable[[int, int, int], Vector]) -> TrilinearMap:
        return cls._raw(tuple(
            tuple(tuple(value(i, j, k).coords for k in range(dim)) for j in range(dim))
            for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.d)

    def on_basis(self, i: int, j: int, k: int) -> Vector:
        return Vector._raw(self.d[i][j][k])

    def postcompose(self, a: LinearMap) -> TrilinearMap:
        _check_dims(self.dim, a.dim)
        n = self.dim
        return TrilinearMap._raw(tuple(
            tuple(tuple(a.apply(self.on_basis(i, j, k)).coords for k in range(n))
                  for j in range(n))
            for i in range(n)))

    def entries(self) -> Iterator[tuple]:
        for i, cube in enumerate(self.d):
            for j, plane in enumerate(cube):
                for k, row in enumerate(plane):
                    for l, x in enumerate(row):
                        if x:
                            yield i, j, k, l, x

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TrilinearMap) and self.d == other.d

    def __hash__(self) -> int:
        return hash(self.d)

    def __repr__(self) -> str:
        return f"TrilinearMap(dim={self.dim})"


def eval_bilinear(b: BilinearMap, x: Vector, y: Vector) -> Vector:
    """Evaluate the product at arbitrary vectors by bilinear expansion."""
    n = _check_dims(b.dim, x.dim, y.dim)
    acc = [ZERO] * n
    for i, xi in enumerate(x.coords):
        if not xi:
            continue
        plane = b.c[i]
        for j, yj in enumerate(y.coords):
            if not yj:
                continue
            f = xi * yj
            for k, ck in enumerate(plane[j]):
                if ck:
                    acc[k] += f * ck
    return Vector._raw(tuple(acc))


def eval_trilinear(t: TrilinearMap, x: Vector, y: Vector, z: Vector) -> Vector:
    """Evaluate the ternary operation by trilinear expansion."""
    n = _check_dims(t.dim, x.dim, y.dim, z.dim)
    acc = [ZERO] * n
    for i, xi in enumerate(x.coords):
        if not xi:
            continue
        cube = t.d[i]
        for j, yj in enumerate(y.coords):
            if not yj:
                continue
            f_ij = xi * yj
            plane = cube[j]
            for k, zk in enumerate(z.coords):
                if not zk:
                    continue
                f = f_ij * zk
                for l, dl in enumerate(plane[k]):
                    if dl:
                        acc[l] += f * dl
    return Vector._raw(tuple(acc))


def compose(a: LinearMap, b: LinearMap) -> LinearMap:
    """Matrix product a . b, i.e. the map x -> a(b(x))."""
    n = _check_dims(a.dim, b.dim)
    bcols = [b.column(j).coords for j in range(n)]
    return LinearMap._raw(tuple(
        tuple(sum((arow[m] * bcols[j][m] for m in range(n) if bcols[j][m]), ZERO)
              for j in range(n))
        for arow in a.rows))


def invert(a: LinearMap) -> LinearMap:
    """Exact inverse by Gauss-Jordan elimination; raises NotInvertible."""
    n = a.dim
    work = [list(row) + [ONE if i == j else ZERO for j in range(n)]
            for i, row in enumerate(a.rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise NotInvertible(f"matrix is singular (rank deficiency at column {col})")
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
        inv_p = ONE / work[col][col]
        work[col] = [x * inv_p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return LinearMap._raw(tuple(tuple(row[n:]) for row in work))


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vector]:
    """Basis of the right null space of a (possibly tall) rational matrix.

    Deterministic: reduced row echelon form with first-nonzero pivoting,
    one basis vector per free column, in increasing column order.
    """
    work = [list(row) for row in rows if any(row)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv_p = ONE / work[r][col]
        work[r] = [x * inv_p for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        coords = [ZERO] * ncols
        coords[fc] = ONE
        for prow, pcol in enumerate(pivots):
            coords[pcol] = -work[prow][fc]
        basis.append(Vector(coords))
    return basis


def solve_unique(a: LinearMap, b: Vector) -> Vector:
    """Solve a x = b when a is invertible; raises NotInvertible otherwise."""
    return invert(a).apply(b)
