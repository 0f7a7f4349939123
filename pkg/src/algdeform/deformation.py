"""Polynomial-type deformation families and shrinking-schedule scans.

A :class:`DeformationFamily` is a structure-constant tensor whose entries are
polynomials in t.  Associativity and the unit law are checked as identities
in t (coefficient by coefficient), so every rational specialization is
automatically a valid algebra.  A :class:`SampledFamily` instead deforms the
relations of a presentation and rebuilds the algebra at each sample value,
which avoids any symbolic computation over the coefficient ring.

``scan`` walks a geometric schedule s_k = base / 2^k and classifies each
specialization (radical dimension, semisimplicity, block profile).  Verdicts
are deliberately schedule-relative: a finite scan can exhibit a stable
semisimple target, never certify one.
"""

from __future__ import annotations

import json

from .algebra import StructureAlgebra
from .analysis import block_profile, radical
from .linalg import ONE, ZERO, GaussianRational, parse_scalar
from .ncpoly import NcPoly, TPoly, parse_ncpoly
from .presentation import BuildResult, Presentation, PresentationError, build


class FamilyValidationError(ValueError):
    """The family does not satisfy the deformation axioms identically in t."""


class ScheduleError(ValueError):
    """Invalid scan schedule parameters."""


class FamilyReport:
    """Failures of the family axioms, as identities in t."""

    __slots__ = ("associativity", "unit")

    def __init__(self, associativity, unit):
        self.associativity = tuple(associativity)
        self.unit = tuple(unit)

    @property
    def ok(self) -> bool:
        return not self.associativity and not self.unit

    def __str__(self):
        if self.ok:
            return "valid: associativity and unit law hold identically in t"
        lines = [
            f"associativity fails in t at basis triple ({i}, {j}, {k})"
            for i, j, k in self.associativity
        ]
        lines += [f"unit law fails in t at basis index {j} ({side})" for j, side in self.unit]
        return "\n".join(lines)


class DeformationFamily:
    """Structure constants polynomial in t; the base algebra sits at t = 0."""

    __slots__ = ("dim", "labels", "unit", "table", "_report")

    def __init__(self, labels, table, unit):
        self.labels = tuple(str(x) for x in labels)
        self.dim = len(self.labels)
        n = self.dim
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError("family tensor has wrong shape")
        tab = []
        for row in table:
            out_row = []
            for vec in row:
                vec = tuple(c if isinstance(c, TPoly) else TPoly.const(c) for c in vec)
                if len(vec) != n:
                    raise ValueError("family tensor has wrong shape")
                out_row.append(vec)
            tab.append(tuple(out_row))
        self.table = tuple(tab)
        self.unit = tuple(GaussianRational.coerce(c) for c in unit)
        if len(self.unit) != n:
            raise ValueError("unit vector has wrong length")
        self._report = None

    def _mul_vec_basis(self, vec, k):
        """(sum_l vec_l d_l) * d_k as a vector of TPoly."""
        n = self.dim
        out = [TPoly() for _ in range(n)]
        for l, c in enumerate(vec):
            if not c:
                continue
            for m, entry in enumerate(self.table[l][k]):
                if entry:
                    out[m] = out[m] + c * entry
        return out

    def _basis_mul_vec(self, i, vec):
        n = self.dim
        out = [TPoly() for _ in range(n)]
        for l, c in enumerate(vec):
            if not c:
                continue
            for m, entry in enumerate(self.table[i][l]):
                if entry:
                    out[m] = out[m] + c * entry
        return out

    def validate(self) -> FamilyReport:
        """Check associativity and the unit law as polynomial identities in t."""
        if self._report is not None:
            return self._report
        n = self.dim
        assoc = []
        for i in range(n):
            for j in range(n):
                vij = self.table[i][j]
                for k in range(n):
                    left = self._mul_vec_basis(vij, k)
                    right = self._basis_mul_vec(i, self.table[j][k])
                    if left != right:
                        assoc.append((i, j, k))
        unit_fail = []
        for j in range(n):
            target = [TPoly.const(1) if l == j else TPoly() for l in range(n)]
            left = [TPoly() for _ in range(n)]
            for l, c in enumerate(self.unit):
                if c:
                    for m, entry in enumerate(self.table[l][j]):
                        if entry:
                            left[m] = left[m] + c * entry
            if left != target:
                unit_fail.append((j, "left"))
            right = [TPoly() for _ in range(n)]
            for l, c in enumerate(self.unit):
                if c:
                    for m, entry in enumerate(self.table[j][l]):
                        if entry:
                            right[m] = right[m] + c * entry
            if right != target:
                unit_fail.append((j, "right"))
        self._report = FamilyReport(assoc, unit_fail)
        return self._report

    def specialize(self, s) -> StructureAlgebra:
        """Exact specialization at a rational t = s; requires a valid family."""
        s = GaussianRational.coerce(parse_scalar(s) if isinstance(s, str) else s)
        if s.im:
            raise ValueError("specialization parameter must be real (zero imaginary part)")
        report = self.validate()
        if not report.ok:
            raise FamilyValidationError(str(report))
        table = [
            [[entry.eval(s) for entry in vec] for vec in row] for row in self.table
        ]
        return StructureAlgebra(self.labels, table, self.unit)

    def base_algebra(self) -> StructureAlgebra:
        return self.specialize(0)

    def to_json_dict(self) -> dict:
        return {
            "kind": "table",
            "dim": self.dim,
            "labels": list(self.labels),
            "unit": [str(c) for c in self.unit],
            "table": [
                [[[str(c) for c in entry.coeffs] for entry in vec] for vec in row]
                for row in self.table
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DeformationFamily":
        n = int(data["dim"])
        labels = data.get("labels") or [f"d{i}" for i in range(n)]
        unit = [parse_scalar(c) for c in data["unit"]]
        table = [
            [
                [TPoly([parse_scalar(c) for c in entry]) for entry in vec]
                for vec in row
            ]
            for row in data["table"]
        ]
        return cls(labels, table, unit)


def constant_family(alg: StructureAlgebra) -> DeformationFamily:
    """The family that is the given algebra at every t."""
    table = [
        [[TPoly.const(c) for c in vec] for vec in row] for row in alg.table
    ]
    return DeformationFamily(alg.labels, table, alg.unit)


def dual_number_family() -> DeformationFamily:
    """Basis {1, x} with x*x = t; splits into two one-blocks at every t != 0."""
    one = TPoly.const(1)
    zero = TPoly()
    t = TPoly.t_power(1)
    return DeformationFamily(
        ["1", "x"],
        [
            [[one, zero], [zero, one]],
            [[zero, one], [t, zero]],
        ],
        [ONE, ZERO],
    )


class SampledFamily:
    """A presentation template whose relations may involve t.

    There is no symbolic quotient over the polynomial ring; each sample value
    substitutes t and rebuilds the algebra from scratch.  The template must
    build to its expected dimension at t = 0.
    """

    __slots__ = ("generators", "relations", "expected_dim", "max_degree")

    def __init__(self, generators, relations, expected_dim, max_degree=None):
        self.generators = tuple(generators)
        self.relations = tuple(relations)
        for r in self.relations:
            if not isinstance(r, NcPoly) or r.gens != self.generators:
                raise ValueError("relations must be NcPoly over the declared generators")
        self.expected_dim = int(expected_dim)
        self.max_degree = max_degree
        self.build_at(0)  # the base of the family must exist

    def presentation_at(self, s) -> Presentation:
        rels = []
        for r in self.relations:
            terms = {w: c for w, c in r.at_t(s)}
            poly = NcPoly(self.generators, terms)
            if not poly.is_zero():
                rels.append(poly)
        return Presentation(self.generators, rels, self.expected_dim, self.max_degree)

    def build_at(self, s) -> BuildResult:
        return build(self.presentation_at(s))

    def to_json_dict(self) -> dict:
        out = {
            "kind": "relations",
            "generators": list(self.generators),
            "relations": [str(r) for r in self.relations],
            "expected_dim": self.expected_dim,
        }
        if self.max_degree is not None:
            out["max_degree"] = self.max_degree
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "SampledFamily":
        gens = tuple(data["generators"])
        rels = [parse_ncpoly(src, gens) for src in data["relations"]]
        return cls(gens, rels, data["expected_dim"], data.get("max_degree"))


def load_family(path):
    """Load either family kind from its JSON file format."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    kind = data.get("kind")
    if kind == "table":
        return DeformationFamily.from_json_dict(data)
    if kind == "relations":
        return SampledFamily.from_json_dict(data)
    raise ValueError(f"unknown family kind {kind!r}")


class ScanSample:
    """One row of a scan: the specialization at s analyzed."""

    __slots__ = ("index", "s", "dim", "semisimple", "radical_dim", "profile", "error")

    def __init__(self, index, s, dim=None, semisimple=None, radical_dim=None,
                 profile=None, error=None):
        self.index = index
        self.s = s
        self.dim = dim
        self.semisimple = semisimple
        self.radical_dim = radical_dim
        self.profile = profile
        self.error = error

    def to_json_dict(self) -> dict:
        return {
            "k": self.index,
            "s": str(self.s),
            "dim": self.dim,
            "semisimple": self.semisimple,
            "radical_dim": self.radical_dim,
            "profile": self.profile.to_json_dict() if self.profile else None,
            "error": self.error,
        }


STABLE = "StableSemisimpleTarget"
NEVER = "NeverSemisimpleOnSchedule"
MIXED = "Mixed"


class ScanVerdict:
    __slots__ = ("kind", "profile", "start_index")

    def __init__(self, kind, profile=None, start_index=None):
        self.kind = kind
        self.profile = profile
        self.start_index = start_index

    def __str__(self):
        if self.kind == STABLE:
            return f"{self.kind}({self.profile}, from k={self.start_index})"
        return self.kind

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "profile": self.profile.to_json_dict() if self.profile else None,
            "start_index": self.start_index,
        }


class ScanResult:
    __slots__ = ("samples", "verdict")

    def __init__(self, samples, verdict):
        self.samples = tuple(samples)
        self.verdict = verdict

    @property
    def schedule(self):
        return tuple(sample.s for sample in self.samples)

    def to_json_dict(self) -> dict:
        return {
            "samples": [s.to_json_dict() for s in self.samples],
            "verdict": self.verdict.to_json_dict(),
        }


def scan(family, base, count=12) -> ScanResult:
    """Analyze the family along the schedule s_k = base / 2^k, k < count.

    The verdict is a deterministic function of the per-sample rows:
    ``StableSemisimpleTarget`` when a tail of samples (through the last one)
    is semisimple with one common profile, ``NeverSemisimpleOnSchedule`` when
    every sample analyzed cleanly and none was semisimple, ``Mixed``
    otherwise.  Sampled (relation-level) families additionally require every
    sample to build at the expected dimension for a stable verdict.
    """
    base = parse_scalar(base) if isinstance(base, str) else GaussianRational.coerce(base)
    if base.im or base.re <= 0:
        raise ScheduleError("schedule base must be a positive rational")
    if count < 2:
        raise ScheduleError("schedule needs at least two samples")
    expected_dim = family.expected_dim if isinstance(family, SampledFamily) else family.dim
    samples = []
    for k in range(count):
        s = GaussianRational(base.re / (2**k))
        if isinstance(family, SampledFamily):
            try:
                alg = family.build_at(s).algebra
            except PresentationError as err:
                samples.append(ScanSample(k, s, error=f"{type(err).__name__}: {err}"))
                continue
        else:
            alg = family.specialize(s)
        rad = radical(alg)
        profile, _ = block_profile(alg)
        samples.append(
            ScanSample(
                k,
                s,
                dim=alg.dim,
                semisimple=rad.dim == 0,
                radical_dim=rad.dim,
                profile=profile,
            )
        )
    return ScanResult(samples, _verdict(samples, expected_dim))


def _verdict(samples, expected_dim) -> ScanVerdict:
    clean = all(row.error is None for row in samples)
    flat = clean and all(row.dim == expected_dim for row in samples)
    if clean and not any(row.semisimple for row in samples):
        return ScanVerdict(NEVER)
    last = samples[-1]
    if flat and last.semisimple:
        start = len(samples) - 1
        while start > 0:
            prev = samples[start - 1]
            if prev.semisimple and prev.profile == last.profile:
                start -= 1
            else:
                break
        return ScanVerdict(STABLE, last.profile, start)
    return ScanVerdict(MIXED)


class TargetComparison:
    """Which candidate profiles match the scan's stable profile."""

    __slots__ = ("stable_profile", "rows", "note")

    def __init__(self, stable_profile, rows, note):
        self.stable_profile = stable_profile
        self.rows = tuple(rows)
        self.note = note

    @property
    def matches(self):
        return tuple(p for p, matched in self.rows if matched)

    @property
    def unique(self) -> bool:
        return len(set(self.matches)) == 1

    def to_json_dict(self) -> dict:
        return {
            "stable_profile": (
                self.stable_profile.to_json_dict() if self.stable_profile else None
            ),
            "targets": [
                {"profile": str(p), "match": matched} for p, matched in self.rows
            ],
            "note": self.note,
        }


def compare_targets(result: ScanResult, targets) -> TargetComparison:
    """Mark the candidate profiles equal to the scan's stable profile.

    Isomorphism of semisimple algebras over the closure is equality of block
    profiles, and a deformation family determines at most one stable target,
    so at most one distinct profile can match.
    """
    if result.verdict.kind != STABLE:
        return TargetComparison(
            None, [(p, False) for p in targets], "no stable target on this schedule"
        )
    stable = result.verdict.profile
    rows = [(p, p == stable) for p in targets]
    matched = [p for p, m in rows if m]
    if not matched:
        note = "stable profile is absent from the candidate list"
    else:
        note = "exactly one candidate matches" if len(set(matched)) == 1 else ""
    return TargetComparison(stable, rows, note)


def trace_form_determinant(family: DeformationFamily) -> TPoly:
    """Determinant of the trace Gram matrix as a polynomial in t.

    A specialization at s is semisimple exactly when this polynomial is
    nonzero at s, so the roots mark the exceptional parameter values.
    """
    n = family.dim
    tau = []
    for l in range(n):
        acc = TPoly()
        for j in range(n):
            acc = acc + family.table[l][j][j]
        tau.append(acc)
    gram = [
        [
            sum(
                (family.table[i][j][l] * tau[l] for l in range(n) if family.table[i][j][l]),
                TPoly(),
            )
            for j in range(n)
        ]
        for i in range(n)
    ]
    # determinant by Laplace expansion memoized over column subsets
    minors = {0: TPoly.const(1)}
    for used in range(1, (1 << n)):
        row = bin(used).count("1") - 1
        acc = TPoly()
        rest = used
        position = 0
        while rest:
            bit = rest & -rest
            rest ^= bit
            col = bit.bit_length() - 1
            sub = minors[used ^ bit]
            if sub and gram[row][col]:
                term = gram[row][col] * sub
                acc = acc + term if (row + position) % 2 == 0 else acc - term
            position += 1
        minors[used] = acc
    return minors[(1 << n) - 1]
