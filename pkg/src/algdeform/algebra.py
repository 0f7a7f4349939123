"""Finite-dimensional unital associative algebras given by structure constants.

A :class:`StructureAlgebra` stores the full multiplication tensor: entry
``table[i][j]`` is the coordinate vector of the product of basis elements i
and j.  The unit is an explicit coordinate vector rather than a distinguished
basis slot, because quotients and presentation builders routinely produce
bases where no single basis element is the identity.
"""

from __future__ import annotations

import json

from .linalg import ONE, ZERO, GaussianRational, Matrix, Subspace, parse_scalar


class NotAnIdealError(ValueError):
    """The given subspace is not a two-sided ideal."""


class UnitInIdealError(ValueError):
    """Quotient by an ideal containing the unit would be the zero ring."""


class ValidationReport:
    """Exhaustive associativity and unit-law check results.

    ``associativity`` lists failing basis triples (i, j, k);
    ``unit`` lists failing basis indices with the side that failed.
    The report is empty exactly when the table is a valid unital algebra.
    """

    __slots__ = ("associativity", "unit")

    def __init__(self, associativity, unit):
        self.associativity = tuple(associativity)
        self.unit = tuple(unit)

    @property
    def ok(self) -> bool:
        return not self.associativity and not self.unit

    def __str__(self):
        if self.ok:
            return "valid: associativity and unit law hold"
        lines = []
        for i, j, k in self.associativity:
            lines.append(f"associativity fails at basis triple ({i}, {j}, {k})")
        for j, side in self.unit:
            lines.append(f"unit law fails at basis index {j} ({side})")
        return "\n".join(lines)


class Element:
    """An algebra element as a coordinate vector over the basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = tuple(GaussianRational.coerce(c) for c in coords)
        if len(self.coords) != algebra.dim:
            raise ValueError("coordinate length does not match algebra dimension")

    def _same_algebra(self, other: "Element"):
        if self.algebra is not other.algebra:
            raise ValueError("elements belong to different algebras")

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._same_algebra(other)
        return Element(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._same_algebra(other)
        return Element(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Element(self.algebra, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, Element):
            self._same_algebra(other)
            return Element(
                self.algebra,
                self.algebra.multiply_coords(self.coords, other.coords),
            )
        c = GaussianRational.coerce(other)
        return Element(self.algebra, [a * c for a in self.coords])

    def __rmul__(self, other):
        c = GaussianRational.coerce(other)
        return Element(self.algebra, [c * a for a in self.coords])

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __repr__(self):
        parts = [
            f"{c}*{lbl}"
            for c, lbl in zip(self.coords, self.algebra.labels)
            if c
        ]
        return "Element(" + (" + ".join(parts) if parts else "0") + ")"


class StructureAlgebra:
    """Unital associative algebra over the Gaussian rationals.

    Immutable after construction.  ``validate`` checks associativity and the
    unit law exhaustively; use it before trusting a hand-written table.
    """

    __slots__ = ("dim", "labels", "table", "unit", "_sparse", "_trace_vector")

    def __init__(self, labels, table, unit):
        self.labels = tuple(str(x) for x in labels)
        self.dim = len(self.labels)
        n = self.dim
        if len(table) != n or any(len(r) != n for r in table):
            raise ValueError("structure tensor has wrong shape")
        tab = []
        for i in range(n):
            row = []
            for j in range(n):
                vec = tuple(GaussianRational.coerce(c) for c in table[i][j])
                if len(vec) != n:
                    raise ValueError("structure tensor has wrong shape")
                row.append(vec)
            tab.append(tuple(row))
        self.table = tuple(tab)
        self.unit = tuple(GaussianRational.coerce(c) for c in unit)
        if len(self.unit) != n:
            raise ValueError("unit vector has wrong length")
        self._sparse = None
        self._trace_vector = None

    # -- element construction ---------------------------------------------

    def element(self, coords) -> Element:
        return Element(self, coords)

    def basis_element(self, i: int) -> Element:
        return Element(self, [ONE if j == i else ZERO for j in range(self.dim)])

    def unit_element(self) -> Element:
        return Element(self, self.unit)

    def zero_element(self) -> Element:
        return Element(self, [ZERO] * self.dim)

    # -- multiplication -------------------------------------------------------

    def _sparse_table(self):
        if self._sparse is None:
            self._sparse = tuple(
                tuple(
                    tuple((l, c) for l, c in enumerate(vec) if c)
                    for vec in row
                )
                for row in self.table
            )
        return self._sparse

    def multiply_coords(self, a, b):
        """Bilinear extension of the structure table to coordinate vectors."""
        n = self.dim
        if len(a) != n or len(b) != n:
            raise ValueError("coordinate length does not match algebra dimension")
        sparse = self._sparse_table()
        out = [ZERO] * n
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = sparse[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                ab = ai * bj
                for l, c in row[j]:
                    out[l] = out[l] + ab * c
        return tuple(out)

    def multiply(self, a: Element, b: Element) -> Element:
        return a * b

    def sparse_multiply(self, a: dict, b: dict) -> dict:
        """Product of sparse coordinate dicts {index: scalar}; zero-free output."""
        sparse = self._sparse_table()
        out = {}
        for i, ai in a.items():
            row = sparse[i]
            for j, bj in b.items():
                ab = ai * bj
                for l, c in row[j]:
                    term = ab if c == 1 else ab * c
                    prev = out.get(l)
                    out[l] = term if prev is None else prev + term
        return {l: v for l, v in out.items() if v}

    def left_regular(self, a: Element) -> Matrix:
        """Matrix of y -> a∘y on the basis; column j is a∘d_j."""
        n = self.dim
        cols = [self.multiply_coords(a.coords, _unit_vec(n, j)) for j in range(n)]
        return Matrix([[cols[j][i] for j in range(n)] for i in range(n)])

    def trace_vector(self):
        """trace(L_{d_i}) for each basis index i; linear data for the Gram form."""
        if self._trace_vector is None:
            n = self.dim
            self._trace_vector = tuple(
                sum((self.table[i][j][j] for j in range(n)), ZERO) for i in range(n)
            )
        return self._trace_vector

    # -- validation -----------------------------------------------------------

    def validate(self) -> ValidationReport:
        n = self.dim
        assoc = []
        for i in range(n):
            for j in range(n):
                vij = self.table[i][j]
                for k in range(n):
                    left = self.multiply_coords(vij, _unit_vec(n, k))
                    right = self.multiply_coords(_unit_vec(n, i), self.table[j][k])
                    if left != right:
                        assoc.append((i, j, k))
        unit = []
        for j in range(n):
            ej = _unit_vec(n, j)
            if self.multiply_coords(self.unit, ej) != ej:
                unit.append((j, "left"))
            if self.multiply_coords(ej, self.unit) != ej:
                unit.append((j, "right"))
        return ValidationReport(assoc, unit)

    # -- serialization ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "unit": [str(c) for c in self.unit],
            "table": [
                [[str(c) for c in vec] for vec in row] for row in self.table
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "StructureAlgebra":
        n = int(data["dim"])
        labels = data.get("labels") or [f"d{i}" for i in range(n)]
        if len(labels) != n:
            raise ValueError("label count does not match dim")
        unit = [parse_scalar(c) for c in data["unit"]]
        table = [
            [[parse_scalar(c) for c in vec] for vec in row] for row in data["table"]
        ]
        return cls(labels, table, unit)

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json_dict(), fh, indent=2)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "StructureAlgebra":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json_dict(json.load(fh))

    def __repr__(self):
        return f"StructureAlgebra(dim {self.dim}: {', '.join(self.labels)})"


def _unit_vec(n, i):
    return tuple(ONE if j == i else ZERO for j in range(n))


def ideal_closure(alg: StructureAlgebra, seed: Subspace) -> Subspace:
    """Smallest two-sided ideal of ``alg`` containing ``seed``.

    Adds left and right basis multiples in the same round, so the fixpoint is
    reached in at most dim(alg) iterations.
    """
    if seed.ambient_dim != alg.dim:
        raise ValueError("seed ambient dimension does not match algebra dimension")
    n = alg.dim
    current = seed
    while True:
        vectors = list(current.basis)
        for v in current.basis:
            for i in range(n):
                ei = _unit_vec(n, i)
                vectors.append(alg.multiply_coords(ei, v))
                vectors.append(alg.multiply_coords(v, ei))
        grown = Subspace.from_vectors(n, vectors)
        if grown.dim == current.dim:
            return grown
        current = grown


def quotient(alg: StructureAlgebra, ideal: Subspace):
    """Quotient algebra by a two-sided ideal, with the projection matrix.

    Returns ``(quotient_algebra, projection)`` where the projection maps old
    coordinates to coordinates on the complement basis (the non-pivot columns
    of the ideal's rref basis) and is an algebra homomorphism.
    """
    if ideal.ambient_dim != alg.dim:
        raise ValueError("ideal ambient dimension does not match algebra dimension")
    if ideal_closure(alg, ideal) != ideal:
        raise NotAnIdealError("subspace is not a two-sided ideal")
    if ideal.dim and ideal.contains(alg.unit):
        raise UnitInIdealError("ideal contains the unit; quotient would be the zero ring")
    n = alg.dim
    pivot_set = set(ideal.pivots)
    comp = [c for c in range(n) if c not in pivot_set]

    def project(vec):
        residue = list(vec)
        for row, p in zip(ideal.basis, ideal.pivots):
            if residue[p]:
                factor = residue[p]
                residue = [a - factor * b for a, b in zip(residue, row)]
        return tuple(residue[c] for c in comp)

    labels = [alg.labels[c] for c in comp]
    table = [
        [project(alg.table[a][b]) for b in comp]
        for a in comp
    ]
    unit = project(alg.unit)
    proj = Matrix([project(_unit_vec(n, j))[r] for j in range(n)] for r in range(len(comp)))
    return StructureAlgebra(labels, table, unit), proj
