"""Newman polynomial multiples of integer polynomials.

A library for deciding, degree by degree, whether an integer polynomial
divides some polynomial with coefficients in {0, 1} and constant term 1
(a Newman polynomial), together with the root-based tooling the decision
rests on: Mahler measures, exact positive-real-root tests, and a
reachable-set certifier for proving non-divisibility.
"""

from .polynomial import (
    NEG_INFINITY,
    EvenValue,
    IntPolynomial,
    InvalidHex,
    NewmanPolynomial,
    NonMonicDivisor,
    ZeroDivisor,
    decode_hex,
    encode_hex,
    parse_polynomial,
)
from .feasibility import (
    FeasibilityOutcome,
    LinearSystem,
    Row,
    SolveOptions,
    Status,
    propagate,
    solve,
    system_from_text,
    system_to_text,
)
from .roots import (
    BoundaryUndecided,
    MahlerResult,
    NoRootOutsideUnitDisk,
    NonConvergence,
    PositiveRealRoot,
    RootEnclosure,
    RootSet,
    annulus_check,
    complex_roots,
    has_positive_real_root,
    mahler_measure,
    select_beta,
)
from .search import (
    InvalidConfig,
    SearchConfig,
    SearchResult,
    SearchStatus,
    build_cofactor_system,
    build_remainder_system,
    find_newman_multiple,
    sweep_power,
)
from .certify import (
    CapExceeded,
    Certificate,
    CertificateKind,
    CertifyOptions,
    ReachableSet,
    Residue,
    certify,
    replay_witness,
)
from .listfile import (
    FormatUndetected,
    ListEntry,
    ParseError,
    ScanConfig,
    SweepReport,
    parse_list,
    run_scan,
    write_list,
)

__version__ = "0.1.0"
