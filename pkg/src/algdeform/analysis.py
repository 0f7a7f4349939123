"""Radical, standard-identity filtration, and Wedderburn block profiles.

The Jacobson radical is computed as the kernel of the trace form of the left
regular representation (valid in characteristic zero).  Block profiles over
the algebraic closure come out of the standard-identity filtration: the layer
between consecutive identity ideals has dimension (count of j-blocks) * j^2,
so the profile is read off by exact division.  Everything is computed over
the Gaussian rationals; span dimensions agree with those over the closure.
"""

from __future__ import annotations

import itertools
from math import isqrt

from .algebra import Element, StructureAlgebra, ideal_closure, quotient
from .linalg import ONE, ZERO, Matrix, Subspace


class InvalidAlgebraError(RuntimeError):
    """An internal consistency check failed; the input table is not a valid algebra."""


class NonIntegralLayerError(RuntimeError):
    """A filtration layer is not divisible by the square of its block size."""


def gram_matrix(alg: StructureAlgebra) -> Matrix:
    """Trace form G[i][j] = trace(L_i L_j) of the left regular representation."""
    n = alg.dim
    tau = alg.trace_vector()
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ZERO
            for l, c in enumerate(alg.table[i][j]):
                if c and tau[l]:
                    acc = acc + c * tau[l]
            row.append(acc)
        rows.append(row)
    return Matrix(rows)


def radical(alg: StructureAlgebra) -> Subspace:
    """Jacobson radical as the kernel of the trace form.

    The result is checked to be a two-sided nilpotent ideal; a failure means
    the input table was not a valid associative algebra and raises
    :class:`InvalidAlgebraError`.
    """
    kernel = gram_matrix(alg).kernel()
    if ideal_closure(alg, kernel) != kernel:
        raise InvalidAlgebraError("trace-form kernel is not an ideal")
    power = kernel
    while power.dim:
        products = []
        for a in power.basis:
            for b in kernel.basis:
                products.append(alg.multiply_coords(a, b))
        next_power = Subspace.from_vectors(alg.dim, products)
        if next_power.dim >= power.dim:
            raise InvalidAlgebraError("trace-form kernel is not nilpotent")
        power = next_power
    return kernel


def is_semisimple(alg: StructureAlgebra) -> bool:
    return radical(alg).dim == 0


def standard_identity_values(alg: StructureAlgebra, m: int):
    """All evaluations of the degree-2m standard identity at basis tuples.

    Only strictly increasing index tuples are evaluated; alternation makes
    every other basis tuple zero or a sign flip of an evaluated one.  Each
    tuple is expanded by the first-factor recursion memoized over argument
    subsets, which replaces the (2m)! permutation sum with subset-DP cost.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return [alg.unit_element()]
    k = 2 * m
    n = alg.dim
    if k > n:
        return []
    values = []
    for combo in itertools.combinations(range(n), k):
        elems = [{i: ONE} for i in combo]
        table = {1 << p: elems[p] for p in range(k)}
        for mask in range(1, 1 << k):
            if mask & (mask - 1) == 0:
                continue
            acc = {}
            position = 0
            rest_bits = mask
            while rest_bits:
                bit = rest_bits & -rest_bits
                rest_bits ^= bit
                sub = table[mask ^ bit]
                if sub:
                    p = bit.bit_length() - 1
                    term = alg.sparse_multiply(elems[p], sub)
                    negate = position % 2
                    for l, v in term.items():
                        prev = acc.get(l)
                        v = -v if negate else v
                        if prev is None:
                            acc[l] = v
                        else:
                            acc[l] = prev + v
                position += 1
            table[mask] = {l: v for l, v in acc.items() if v}
        top = table[(1 << k) - 1]
        values.append(
            Element(alg, [top.get(i, ZERO) for i in range(n)])
        )
    return values


def identity_span(alg: StructureAlgebra, m: int) -> Subspace:
    """Span of the degree-2m standard identity evaluated at basis tuples."""
    return Subspace.from_vectors(
        alg.dim, [v.coords for v in standard_identity_values(alg, m)]
    )


def identity_ideal(alg: StructureAlgebra, m: int) -> Subspace:
    """Two-sided ideal generated by the degree-2m standard identity values."""
    return ideal_closure(alg, identity_span(alg, m))


class BlockProfile:
    """Multiset of matrix-block sizes: counts[j] blocks of size j.

    This is the Artin-Wedderburn shape of a semisimple algebra over the
    algebraic closure; the total dimension is the sum of counts[j] * j^2.
    """

    __slots__ = ("counts",)

    def __init__(self, counts):
        cleaned = {}
        for j in sorted(counts):
            c = counts[j]
            if c < 0 or j < 1:
                raise ValueError("block sizes and counts must be positive")
            if c:
                cleaned[int(j)] = int(c)
        self.counts = cleaned

    @property
    def dimension(self) -> int:
        return sum(c * j * j for j, c in self.counts.items())

    def blocks(self):
        """Block sizes with multiplicity, descending."""
        out = []
        for j in sorted(self.counts, reverse=True):
            out.extend([j] * self.counts[j])
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, BlockProfile):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self):
        return hash(tuple(sorted(self.counts.items())))

    def __str__(self):
        if not self.counts:
            return "(zero)"
        return " ".join(f"{j}^{c}" for j, c in sorted(self.counts.items()))

    def __repr__(self):
        return f"BlockProfile({self})"

    def to_json_dict(self) -> dict:
        return {str(j): c for j, c in sorted(self.counts.items())}

    @classmethod
    def from_json_dict(cls, data) -> "BlockProfile":
        return cls({int(j): int(c) for j, c in data.items()})


class FiltrationReport:
    """Dimensions of the identity-ideal chain and its layer differences.

    ``dims[m]`` is the dimension of the ideal generated by the degree-2m
    standard identity values (with dims[0] the whole algebra); semisimple
    algebras reach 0 at m = floor(sqrt(dim)).
    """

    __slots__ = ("dims", "layer_dims")

    def __init__(self, dims):
        self.dims = tuple(dims)
        self.layer_dims = tuple(
            self.dims[j - 1] - self.dims[j] for j in range(1, len(self.dims))
        )

    def __repr__(self):
        return f"FiltrationReport(dims={list(self.dims)})"


def block_profile(alg: StructureAlgebra):
    """Wedderburn block profile over the algebraic closure.

    Non-semisimple input is first replaced by its quotient modulo the
    radical.  Returns ``(profile, filtration_report)``.
    """
    rad = radical(alg)
    ss = alg if rad.dim == 0 else quotient(alg, rad)[0]
    n = ss.dim
    top = isqrt(n)
    dims = [n]
    for m in range(1, top + 1):
        dims.append(identity_ideal(ss, m).dim)
    if dims[-1] != 0:
        raise NonIntegralLayerError(
            "identity filtration does not terminate; input table is not valid"
        )
    counts = {}
    for j in range(1, top + 1):
        layer = dims[j - 1] - dims[j]
        if layer % (j * j):
            raise NonIntegralLayerError(
                f"layer {j} has dimension {layer}, not divisible by {j * j}"
            )
        if layer:
            counts[j] = layer // (j * j)
    return BlockProfile(counts), FiltrationReport(dims)


def enumerate_semisimple_types(n: int, max_block=None):
    """All block profiles of total dimension n, in a deterministic order.

    Equivalently: multisets of positive integers whose squares sum to n,
    optionally capped at ``max_block``.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    cap = isqrt(n) if max_block is None else min(int(max_block), isqrt(n))
    found = []

    def descend(remaining, max_part, acc):
        if remaining == 0:
            found.append(tuple(acc))
            return
        for j in range(min(max_part, isqrt(remaining)), 0, -1):
            acc.append(j)
            descend(remaining - j * j, j, acc)
            acc.pop()

    descend(n, cap, [])
    found.sort()
    profiles = []
    for parts in found:
        counts = {}
        for j in parts:
            counts[j] = counts.get(j, 0) + 1
        profiles.append(BlockProfile(counts))
    return profiles
