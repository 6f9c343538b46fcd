"""Exact linear algebra over the rationals.

Everything here works on :class:`fractions.Fraction` values. Matrices are
immutable row tuples, subspaces are stored by their reduced row-echelon
basis so that two equal subspaces compare equal structurally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Integral, Rational
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]


class DimensionError(ValueError):
    """Raised when operands live in spaces of different dimension."""


def to_q(value) -> Fraction:
    """Coerce ``value`` to a Fraction.

    Accepts integers, Fractions and strings of the form ``"p"`` or ``"p/q"``.
    Floats are rejected on purpose.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (Integral, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE "):
            raise ValueError(f"malformed rational {value!r}")
        num, _, den = text.partition("/")
        if _ and not den:
            raise ValueError(f"malformed rational {value!r}")
        try:
            n = int(num)
            d = int(den) if den else 1
        except ValueError:
            raise ValueError(f"malformed rational {value!r}") from None
        if d == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(n, d)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def fmt_q(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec(values: Iterable) -> Vector:
    return tuple(to_q(v) for v in values)


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix acting on column vectors."""

    rows: int
    cols: int
    entries: tuple = field(repr=False)

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError("entry grid does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        grid = tuple(tuple(to_q(x) for x in r) for r in rows)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        return cls(len(grid), cols, grid)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(unit_vec(n, i) for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        cols = [tuple(to_q(x) for x in c) for c in columns]
        grid = tuple(tuple(c[i] for c in cols) for i in range(rows))
        return cls(rows, len(cols), grid)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    @property
    def T(self) -> "Matrix":
        grid = tuple(tuple(r[j] for r in self.entries) for j in range(self.cols))
        return Matrix(self.cols, self.rows, grid)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for a {self.rows}x{self.cols} matrix")
        return tuple(dot(r, v) for r in self.entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        grid = tuple(tuple(dot(r, c) for c in cols) for r in self.entries)
        return Matrix(self.rows, other.cols, grid)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(vadd(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(vsub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = to_q(c)
        return Matrix(self.rows, self.cols, tuple(vscale(c, r) for r in self.entries))

    def _same_shape(self, other: "Matrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("matrix shapes differ")

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.entries)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.T

    def is_square(self) -> bool:
        return self.rows == self.cols

    def rank(self) -> int:
        return len(rref_pivots(self)[1])

    def det(self) -> Fraction:
        if not self.is_square():
            raise DimensionError("determinant of a non-square matrix")
        m = [list(r) for r in self.entries]
        n = self.rows
        d = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            d *= m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] / m[c][c]
                if f:
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return d

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        aug = hstack(self, Matrix.identity(n))
        red, pivots = rref_pivots(aug)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix(n, n, tuple(r[n:] for r in red.entries))

    def solve(self, b: Sequence[Fraction]) -> Vector | None:
        """One solution of ``self @ x = b`` or None when inconsistent."""
        aug = hstack(self, Matrix.from_columns([b], self.rows))
        red, pivots = rref_pivots(aug)
        if pivots and pivots[-1] == self.cols:
            return None
        x = [Fraction(0)] * self.cols
        for r, p in enumerate(pivots):
            x[p] = red.entries[r][self.cols]
        return tuple(x)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(fmt_q(x) for x in r) + "]" for r in self.entries) + "]"


def hstack(*ms: Matrix) -> Matrix:
    rows = ms[0].rows
    if any(m.rows != rows for m in ms):
        raise DimensionError("row counts differ")
    grid = tuple(sum((m.entries[i] for m in ms), ()) for i in range(rows))
    return Matrix(rows, sum(m.cols for m in ms), grid)


def vstack(*ms: Matrix) -> Matrix:
    cols = ms[0].cols
    if any(m.cols != cols for m in ms):
        raise DimensionError("column counts differ")
    return Matrix(sum(m.rows for m in ms), cols, sum((m.entries for m in ms), ()))


def block_diag(*ms: Matrix) -> Matrix:
    rows = sum(m.rows for m in ms)
    cols = sum(m.cols for m in ms)
    grid = []
    off = 0
    for m in ms:
        for r in m.entries:
            grid.append((Fraction(0),) * off + r + (Fraction(0),) * (cols - off - m.cols))
        off += m.cols
    return Matrix(rows, cols, tuple(grid))


def rref_pivots(m: Matrix) -> tuple[Matrix, list[int]]:
    a = [list(r) for r in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if piv != 1:
            a[r] = [x / piv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return Matrix(m.rows, m.cols, tuple(tuple(x) for x in a)), pivots


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form; zero rows are kept at the bottom."""
    return rref_pivots(m)[0]


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n held by its canonical reduced-echelon basis.

    Build instances with :meth:`span` (or the set operations below); the
    raw constructor trusts its input.
    """

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = [tuple(to_q(x) for x in v) for v in vectors]
        if any(len(r) != ambient_dim for r in rows):
            raise DimensionError("spanning vector has the wrong length")
        if not rows:
            return cls.zero(ambient_dim)
        red, pivots = rref_pivots(Matrix(len(rows), ambient_dim, tuple(rows)))
        return cls(ambient_dim, Matrix(len(pivots), ambient_dim, red.entries[: len(pivots)]))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix(0, n, ()))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n))

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls.span([unit_vec(n, i) for i in sorted(set(indices))], n)

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> tuple:
        return self.basis.entries

    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(r) if x) for r in self.basis.entries]

    def contains(self, v: Sequence[Fraction]) -> bool:
        return self.coordinates(v) is not None

    def coordinates(self, v: Sequence[Fraction]) -> Vector | None:
        """Coefficients of ``v`` in the stored basis, or None if ``v`` is outside."""
        v = tuple(to_q(x) for x in v)
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length differs from the ambient dimension")
        coeffs = []
        rest = list(v)
        for row, p in zip(self.basis.entries, self.pivots()):
            c = rest[p]
            coeffs.append(c)
            if c:
                rest = [a - c * b for a, b in zip(rest, row)]
        if any(rest):
            return None
        return tuple(coeffs)

    def contains_subspace(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(self.contains(v) for v in other.vectors)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    def __str__(self) -> str:
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim}, basis={self.basis})"


def _check_ambient(s1: Subspace, s2: Subspace):
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {s1.ambient_dim} vs {s2.ambient_dim}")


def kernel(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}``."""
    red, pivots = rref_pivots(m)
    free = [j for j in range(m.cols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red.entries[r][f]
        basis.append(v)
    return Subspace.span(basis, m.cols)


def image(m: Matrix, s: Subspace | None = None) -> Subspace:
    """Image of ``s`` (default: whole source) under ``m``."""
    if s is None:
        return Subspace.span([m.column(j) for j in range(m.cols)], m.rows)
    if s.ambient_dim != m.cols:
        raise DimensionError("subspace does not live in the source of the map")
    return Subspace.span([m.apply(v) for v in s.vectors], m.rows)


def preimage(m: Matrix, s: Subspace) -> Subspace:
    """``{v : m v in s}``."""
    if s.ambient_dim != m.rows:
        raise DimensionError("subspace does not live in the target of the map")
    ann = annihilator(s)
    if ann.dim == 0:
        return Subspace.full(m.cols)
    return kernel(Matrix(ann.dim, ann.ambient_dim, ann.vectors) @ m)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    _check_ambient(s1, s2)
    return Subspace.span(s1.vectors + s2.vectors, s1.ambient_dim)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    _check_ambient(s1, s2)
    if s1.dim == 0 or s2.dim == 0:
        return Subspace.zero(s1.ambient_dim)
    # a in s1 with a = sum x_i u_i = sum y_j w_j
    cols = list(s1.vectors) + [vscale(-1, w) for w in s2.vectors]
    rel = kernel(Matrix.from_columns(cols, s1.ambient_dim))
    vecs = []
    for sol in rel.vectors:
        v = zero_vec(s1.ambient_dim)
        for c, u in zip(sol[: s1.dim], s1.vectors):
            if c:
                v = vadd(v, vscale(c, u))
        vecs.append(v)
    return Subspace.span(vecs, s1.ambient_dim)


def annihilator(s: Subspace) -> Subspace:
    """Annihilator in the dual space, using the standard dual basis."""
    if s.dim == 0:
        return Subspace.full(s.ambient_dim)
    return kernel(s.basis)


def is_transverse(s1: Subspace, s2: Subspace) -> bool:
    _check_ambient(s1, s2)
    return s1.dim + s2.dim == s1.ambient_dim and intersect(s1, s2).dim == 0


def orthogonal_complement(s: Subspace, form: Matrix) -> Subspace:
    """``{v : form(v, w) = 0 for all w in s}`` for a symmetric ``form``."""
    if not form.is_symmetric():
        raise ValueError("orthogonal complement needs a symmetric form")
    if form.rows != s.ambient_dim:
        raise DimensionError("form size differs from the ambient dimension")
    if s.dim == 0:
        return Subspace.full(s.ambient_dim)
    return kernel(Matrix(s.dim, s.ambient_dim, s.vectors) @ form)


def direct_sum_subspace(s1: Subspace, s2: Subspace) -> Subspace:
    """``s1 + s2`` inside ``Q^(n1+n2)``."""
    n1, n2 = s1.ambient_dim, s2.ambient_dim
    vecs = [tuple(v) + zero_vec(n2) for v in s1.vectors] + [zero_vec(n1) + tuple(v) for v in s2.vectors]
    return Subspace.span(vecs, n1 + n2)


def bilinear(form: Matrix, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return dot(u, form.apply(v))


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    """Matrix sending coordinate ``i`` to coordinate ``perm[i]``."""
    n = len(perm)
    grid = [[Fraction(0)] * n for _ in range(n)]
    for i, p in enumerate(perm):
        grid[p][i] = Fraction(1)
    return Matrix(n, n, tuple(tuple(r) for r in grid))


@dataclass(frozen=True)
class RationalTensor3:
    """Structure constants ``c[i, j, k]``: coefficient of ``e_k`` in ``[e_i, e_j]``.

    Stored sparsely; zero entries are dropped on construction.
    """

    dim: int
    entries: tuple = ()

    @classmethod
    def from_dict(cls, dim: int, data: dict) -> "RationalTensor3":
        items = []
        for (i, j, k), v in data.items():
            if not all(0 <= x < dim for x in (i, j, k)):
                raise IndexError(f"structure constant index {(i, j, k)} out of range for dim {dim}")
            q = to_q(v)
            if q:
                items.append(((i, j, k), q))
        return cls(dim, tuple(sorted(items)))

    @classmethod
    def zero(cls, dim: int) -> "RationalTensor3":
        return cls(dim, ())

    def as_dict(self) -> dict:
        return dict(self.entries)

    def __getitem__(self, ijk) -> Fraction:
        return self._dense_lookup().get(ijk, Fraction(0))

    def _dense_lookup(self) -> dict:
        cache = self.__dict__.get("_lookup")
        if cache is None:
            cache = dict(self.entries)
            object.__setattr__(self, "_lookup", cache)
        return cache

    def table(self) -> dict:
        """Mapping ``(i, j) -> ((k, c), ...)`` over nonzero entries."""
        cache = self.__dict__.get("_table")
        if cache is None:
            cache = {}
            for (i, j, k), v in self.entries:
                cache.setdefault((i, j), []).append((k, v))
            cache = {key: tuple(val) for key, val in cache.items()}
            object.__setattr__(self, "_table", cache)
        return cache
