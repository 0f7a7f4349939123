"""Stock algebras: matrix units, direct sums, and friends.

These are the reference tables used by the analysis tests, the sampling side
of the obstruction machinery, and the demo scripts.
"""

from __future__ import annotations

from .algebra import StructureAlgebra
from .linalg import ONE, ZERO


def matrix_unit_algebra(k: int) -> StructureAlgebra:
    """Full k-by-k matrix algebra on the matrix-unit basis e_rc."""
    if k < 1:
        raise ValueError("matrix size must be at least 1")
    pairs = [(r, c) for r in range(1, k + 1) for c in range(1, k + 1)]
    index = {rc: i for i, rc in enumerate(pairs)}
    n = len(pairs)
    labels = [f"e{r}{c}" for r, c in pairs]
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i, (a, b) in enumerate(pairs):
        for j, (c, d) in enumerate(pairs):
            if b == c:
                vec = [ZERO] * n
                vec[index[(a, d)]] = ONE
                table[i][j] = vec
    unit = [ZERO] * n
    for r in range(1, k + 1):
        unit[index[(r, r)]] = ONE
    return StructureAlgebra(labels, table, unit)


def upper_triangular_algebra(k: int) -> StructureAlgebra:
    """Upper-triangular k-by-k matrices on the basis e_rc with r <= c."""
    if k < 1:
        raise ValueError("matrix size must be at least 1")
    pairs = [(r, c) for r in range(1, k + 1) for c in range(r, k + 1)]
    index = {rc: i for i, rc in enumerate(pairs)}
    n = len(pairs)
    labels = [f"e{r}{c}" for r, c in pairs]
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i, (a, b) in enumerate(pairs):
        for j, (c, d) in enumerate(pairs):
            if b == c:
                vec = [ZERO] * n
                vec[index[(a, d)]] = ONE
                table[i][j] = vec
    unit = [ZERO] * n
    for r in range(1, k + 1):
        unit[index[(r, r)]] = ONE
    return StructureAlgebra(labels, table, unit)


def dual_numbers() -> StructureAlgebra:
    """Two-dimensional algebra with basis {1, x} and x*x = 0."""
    return StructureAlgebra(
        ["1", "x"],
        [
            [[ONE, ZERO], [ZERO, ONE]],
            [[ZERO, ONE], [ZERO, ZERO]],
        ],
        [ONE, ZERO],
    )


def scalar_field() -> StructureAlgebra:
    """The one-dimensional algebra."""
    return StructureAlgebra(["1"], [[[ONE]]], [ONE])


def direct_sum(*algebras: StructureAlgebra) -> StructureAlgebra:
    """Direct sum with block-diagonal table; labels get a block suffix."""
    if not algebras:
        raise ValueError("direct sum of no algebras")
    if len(algebras) == 1:
        return algebras[0]
    n = sum(a.dim for a in algebras)
    labels = []
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    unit = [ZERO] * n
    offset = 0
    for idx, alg in enumerate(algebras):
        for lbl in alg.labels:
            labels.append(f"{lbl}_{idx}")
        for i in range(alg.dim):
            unit[offset + i] = alg.unit[i]
            for j in range(alg.dim):
                vec = [ZERO] * n
                for l in range(alg.dim):
                    vec[offset + l] = alg.table[i][j][l]
                table[offset + i][offset + j] = vec
        offset += alg.dim
    return StructureAlgebra(labels, table, unit)


def from_block_sizes(sizes) -> StructureAlgebra:
    """Direct sum of full matrix algebras of the given sizes."""
    sizes = list(sizes)
    if not sizes:
        raise ValueError("no block sizes given")
    return direct_sum(*(matrix_unit_algebra(k) for k in sizes))


def from_profile(profile) -> StructureAlgebra:
    """Model semisimple algebra for a block profile (or a {size: count} map)."""
    counts = getattr(profile, "counts", profile)
    sizes = []
    for j in sorted(counts):
        sizes.extend([j] * counts[j])
    return from_block_sizes(sizes)


def change_basis(alg: StructureAlgebra, basis_matrix) -> StructureAlgebra:
    """The same algebra on the basis given by the matrix's columns.

    Column i of ``basis_matrix`` holds the old coordinates of the new basis
    element b_i; the matrix must be invertible.  Everything invariant
    (radical dimension, filtration, block profile) must agree with the
    original, which makes this the natural stress test for those routines.
    """
    n = alg.dim
    inv = basis_matrix.inverse()
    cols = [tuple(basis_matrix.rows[r][i] for r in range(n)) for i in range(n)]
    table = [
        [inv.mul_vec(alg.multiply_coords(cols[i], cols[j])) for j in range(n)]
        for i in range(n)
    ]
    unit = inv.mul_vec(alg.unit)
    return StructureAlgebra([f"b{i}" for i in range(n)], table, unit)
