"""algdeform: exact arithmetic for finite-dimensional associative algebras.

Everything runs over the Gaussian rationals with arbitrary-precision
fractions; there is no floating point anywhere.  The pieces:

``linalg``
    Exact scalars, dense matrices, rref/kernel, canonical subspaces.
``ncpoly``
    Noncommutative polynomials with t-polynomial coefficients, and the
    relation parser.
``algebra``
    Structure-constant algebras, validation, ideals, quotients.
``presentation``
    Degree-truncated construction of an algebra from generators and
    relations.
``analysis``
    Jacobson radical, standard-identity filtration, Wedderburn block
    profiles, semisimple-type enumeration.
``deformation``
    Polynomial-type deformation families, exact specialization, schedule
    scans.
``obstruction``
    Word-family spans, the power-tower bound, deformation-target filtering.

The ``algdeform`` command line (or ``python -m algdeform``) exposes build,
analyze, scan, obstruct, enumerate, and identity-span over JSON files; the
``demos/`` directory of the repository walks each capability.
"""

from .algebra import Element, StructureAlgebra, ideal_closure, quotient
from .analysis import (
    BlockProfile,
    FiltrationReport,
    block_profile,
    enumerate_semisimple_types,
    identity_ideal,
    identity_span,
    is_semisimple,
    radical,
)
from .deformation import (
    DeformationFamily,
    SampledFamily,
    ScanResult,
    compare_targets,
    constant_family,
    scan,
    trace_form_determinant,
)
from .linalg import GaussianRational, Matrix, Subspace, parse_scalar, span_join
from .ncpoly import NcPoly, TPoly, parse_ncpoly
from .obstruction import (
    ObstructionReport,
    WordFamily,
    admissible_targets,
    family_span_dim,
    sampled_lower_bound,
    tower_bound,
    tower_family,
)
from .presentation import BuildResult, Presentation, build

__version__ = "0.1.0"

__all__ = [
    "BlockProfile",
    "BuildResult",
    "DeformationFamily",
    "Element",
    "FiltrationReport",
    "GaussianRational",
    "Matrix",
    "NcPoly",
    "ObstructionReport",
    "Presentation",
    "SampledFamily",
    "ScanResult",
    "StructureAlgebra",
    "Subspace",
    "TPoly",
    "WordFamily",
    "admissible_targets",
    "block_profile",
    "build",
    "compare_targets",
    "constant_family",
    "enumerate_semisimple_types",
    "family_span_dim",
    "ideal_closure",
    "identity_ideal",
    "identity_span",
    "is_semisimple",
    "parse_ncpoly",
    "parse_scalar",
    "quotient",
    "radical",
    "sampled_lower_bound",
    "scan",
    "span_join",
    "tower_bound",
    "tower_family",
    "trace_form_determinant",
]
