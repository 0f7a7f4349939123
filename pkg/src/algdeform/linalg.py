"""Exact linear algebra over the Gaussian rationals.

Scalars are numbers a + b*i with arbitrary-precision rational a, b; matrices
are dense and every elimination is exact.  Subspaces are stored through their
reduced row echelon basis, which makes subspace equality a plain data
comparison.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction


class ScalarSyntaxError(ValueError):
    """Malformed scalar literal."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class GaussianRational:
    """An exact number a + b*i with rational real and imaginary parts.

    Values are immutable; arithmetic mixes freely with ``int`` and
    ``Fraction``, and a value with zero imaginary part compares (and hashes)
    equal to the corresponding plain rational.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(_as_fraction(x))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_rational(self) -> bool:
        return not self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return GaussianRational(self.re + other, self.im)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return GaussianRational(self.re - other, self.im)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return GaussianRational(other - self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return GaussianRational(self.re * other, self.im * other)
        if not self.im and not other.im:
            return GaussianRational(self.re * other.re)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if not self.im:
            return GaussianRational(1 / self.re)
        norm = self.re * self.re + self.im * self.im
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return GaussianRational(other) * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        # must agree with Fraction's hash when the value is plain rational
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return _rat_str(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{_rat_str(self.im)}*i"
        if not self.re:
            return imag
        sep = "+" if self.im > 0 else ""
        return f"{_rat_str(self.re)}{sep}{imag}"

    def __repr__(self):
        return f"GaussianRational({self})"


def _rat_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def _parse_rational(text: str, full: str) -> Fraction:
    num, slash, den = text.partition("/")
    if not num.isdigit():
        raise ScalarSyntaxError(f"malformed scalar literal {full!r}")
    if slash:
        if not den.isdigit():
            raise ScalarSyntaxError(f"malformed scalar literal {full!r}")
        if int(den) == 0:
            raise ScalarSyntaxError(f"zero denominator in scalar literal {full!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(num))


def parse_scalar(text) -> GaussianRational:
    """Parse the exact scalar syntax: ``a/b``, ``a/b+c/d*i``, ``c/d*i``, ``i``.

    Integers abbreviate rationals (``3`` means ``3/1``) and whitespace is
    ignored.  Raises :class:`ScalarSyntaxError` on anything else.
    """
    if isinstance(text, (int, Fraction)):
        return GaussianRational(text)
    s = "".join(str(text).split())
    if not s:
        raise ScalarSyntaxError("empty scalar literal")
    terms = []
    start = 0
    for pos in range(1, len(s)):
        if s[pos] in "+-":
            terms.append(s[start:pos])
            start = pos
    terms.append(s[start:])
    re_part = None
    im_part = None
    for term in terms:
        sign = 1
        body = term
        if body and body[0] in "+-":
            if body[0] == "-":
                sign = -1
            body = body[1:]
        if not body:
            raise ScalarSyntaxError(f"malformed scalar literal {text!r}")
        if body.endswith("i"):
            if im_part is not None:
                raise ScalarSyntaxError(f"repeated imaginary part in {text!r}")
            mag = body[:-1]
            if mag.endswith("*"):
                mag = mag[:-1]
            elif mag:
                raise ScalarSyntaxError(f"malformed scalar literal {text!r}")
            im_part = sign * (_parse_rational(mag, s) if mag else Fraction(1))
        else:
            if re_part is not None:
                raise ScalarSyntaxError(f"repeated real part in {text!r}")
            re_part = sign * _parse_rational(body, s)
    return GaussianRational(re_part or Fraction(0), im_part or Fraction(0))


def _coerce_vector(entries):
    return tuple(GaussianRational.coerce(x) for x in entries)


class Matrix:
    """Dense matrix of Gaussian rationals.  Immutable after construction."""

    __slots__ = ("rows", "nrows", "ncols", "_rref")

    def __init__(self, rows):
        rows = tuple(_coerce_vector(r) for r in rows)
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != self.ncols:
                raise ValueError("ragged rows")
        self.rows = rows
        self._rref = None

    @classmethod
    def identity(cls, n) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, nrows, ncols) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)])

    def rref(self):
        """Reduced row echelon form.  Returns ``(matrix, pivot_columns)``."""
        if self._rref is None:
            self._rref = _rref_rows(self.rows, self.ncols)
        rows, pivots = self._rref
        return Matrix(rows), pivots

    @property
    def rank(self) -> int:
        if self._rref is None:
            self._rref = _rref_rows(self.rows, self.ncols)
        return len(self._rref[1])

    def kernel(self) -> "Subspace":
        """Right kernel, i.e. all v with M·v = 0."""
        if self._rref is None:
            self._rref = _rref_rows(self.rows, self.ncols)
        rows, pivots = self._rref
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        vectors = []
        for f in free:
            v = [ZERO] * self.ncols
            v[f] = ONE
            for r, p in enumerate(pivots):
                v[p] = -rows[r][f]
            vectors.append(v)
        return Subspace.from_vectors(self.ncols, vectors)

    def mul_vec(self, vec):
        vec = _coerce_vector(vec)
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum((row[j] * vec[j] for j in range(self.ncols) if vec[j]), ZERO)
            for row in self.rows
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions do not match")
        cols = list(zip(*other.rows)) if other.rows else []
        return Matrix(
            [
                [sum((a * b for a, b in zip(row, col) if a and b), ZERO) for col in cols]
                for row in self.rows
            ]
        )

    def trace(self) -> GaussianRational:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), ZERO)

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        augmented = [
            list(self.rows[i]) + [ONE if j == i else ZERO for j in range(n)]
            for i in range(n)
        ]
        reduced, pivots = _rref_rows(augmented, 2 * n)
        if len(pivots) < n or pivots[n - 1] != n - 1:
            raise ZeroDivisionError("matrix is singular")
        return Matrix([row[n:] for row in reduced[:n]])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}: {body}]"


def _rref_rows(rows, ncols):
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][c].inverse()
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                factor = work[i][c]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in work), tuple(pivots)


class Subspace:
    """A subspace of column vectors, canonically represented by rref rows."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, basis, pivots):
        self.ambient_dim = ambient_dim
        self.basis = basis        # tuple of rref rows, no zero rows
        self.pivots = pivots      # pivot column per basis row

    @classmethod
    def from_vectors(cls, ambient_dim, vectors) -> "Subspace":
        vectors = [_coerce_vector(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        rows, pivots = _rref_rows(vectors, ambient_dim)
        return cls(ambient_dim, rows[: len(pivots)], pivots)

    @classmethod
    def zero(cls, ambient_dim) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim) -> "Subspace":
        return cls.from_vectors(ambient_dim, Matrix.identity(ambient_dim).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec) -> bool:
        vec = _coerce_vector(vec)
        if len(vec) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        residue = list(vec)
        for row, p in zip(self.basis, self.pivots):
            if residue[p]:
                factor = residue[p]
                residue = [a - factor * b for a, b in zip(residue, row)]
        return not any(residue)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def join(self, other: "Subspace") -> "Subspace":
        """Smallest subspace containing both operands (span of the union)."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.from_vectors(self.ambient_dim, list(self.basis) + list(other.basis))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


def span_join(a: Subspace, b: Subspace) -> Subspace:
    return a.join(b)
