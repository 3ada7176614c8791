"""Search for Newman multiples of an integer polynomial, degree by degree.

Two encodings of "P divides some Newman polynomial of total degree T" as
bounded-integer linear systems:

* cofactor mode: unknowns are the integer coefficients of a monic cofactor
  q of degree m = T - deg(P); each coefficient of P*q is constrained to
  [0, 1] (1 exactly at the ends).  The unknowns are general integers.
* binary cofactor mode: unknowns are the 0/1 coefficients of the product
  itself; the remainder of the product modulo P must vanish coefficient by
  coefficient (deg(P) equality rows).

Either way a feasible point is re-verified by exact multiplication or
division before being reported, an infeasible answer soundly refutes that
total degree, and sweeps ascend so the first witness has minimal degree.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

from .feasibility import (
    FeasibilityOutcome,
    LinearSystem,
    Row,
    SolveOptions,
    Status,
    solve,
)
from .polynomial import IntPolynomial, NewmanPolynomial
from .roots import PositiveRealRoot, has_positive_real_root

__all__ = [
    "InvalidConfig",
    "SearchConfig",
    "SearchStatus",
    "SearchResult",
    "build_cofactor_system",
    "build_remainder_system",
    "find_newman_multiple",
    "sweep_power",
]


class InvalidConfig(ValueError):
    """Rejected input or configuration for the multiple search."""


@dataclass(frozen=True)
class SearchConfig:
    """Settings for :func:`find_newman_multiple`.

    ``power`` searches for multiples of p**power.  ``binary_cofactor``
    switches from integer cofactor unknowns to 0/1 product unknowns.
    ``prefilter`` skips degrees where no integer in the attainable value
    range at x = 2 or x = -2 is a multiple of P there (a sound necessary
    condition, checked in binary mode only).  ``explore_all_degrees``
    keeps sweeping past the first witness so every degree in range gets an
    outcome.  ``min_total_degree`` skips lower degrees entirely (they are
    then neither refuted nor counted unknown).
    """

    max_total_degree: int = 1000
    power: int = 1
    binary_cofactor: bool = False
    prefilter: bool = False
    explore_all_degrees: bool = False
    min_total_degree: Optional[int] = None
    solve_options: Optional[SolveOptions] = None


class SearchStatus(Enum):
    FOUND = "found"
    NOT_FOUND_UP_TO_DEGREE = "not-found-up-to-degree"
    EXHAUSTED_WITH_UNKNOWNS = "exhausted-with-unknowns"


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a sweep over total degrees.

    ``frontier`` is the highest total degree T such that every degree up to
    T is soundly refuted (degrees below deg(P) are impossible outright).
    ``degree_outcomes`` maps each examined degree to "found", "refuted" or
    "unknown"; ``witnesses`` holds the product found at each found degree.
    """

    status: SearchStatus
    polynomial: IntPolynomial
    power: int
    product: Optional[NewmanPolynomial] = None
    cofactor: Optional[IntPolynomial] = None
    total_degree: Optional[int] = None
    frontier: int = -1
    unknown_degrees: tuple[int, ...] = ()
    degree_outcomes: dict[int, str] = field(default_factory=dict)
    witnesses: dict[int, NewmanPolynomial] = field(default_factory=dict)
    nodes: int = 0
    wall_time: float = 0.0


def build_cofactor_system(P: IntPolynomial, m: int) -> LinearSystem:
    """Linear system for a monic degree-m integer cofactor q with P*q Newman.

    Rows run over every product coefficient c_k, highest k first:
    0 <= c_k <= 1 in between, c_0 = 1 and c_{deg P + m} = 1 exactly.  The
    leading cofactor coefficient is fixed at 1.  When P(0) is 1 or -1 the
    constant cofactor coefficient is forced to 1/P(0) and substituted out,
    leaving unknowns b_1 .. b_{m-1} (variable j is b_{j+1}); otherwise b_0
    stays variable (variable j is b_j) and the c_0 row refutes the system.
    """
    D = P.degree
    if not P.is_monic() or not isinstance(D, int) or D < 1:
        raise InvalidConfig("P must be monic of degree >= 1")
    if m < 1:
        raise InvalidConfig("cofactor degree m must be >= 1")
    p0 = P.constant_term()
    fixed_b0: Optional[int] = p0 if p0 in (1, -1) else None
    if fixed_b0 is not None:
        num_vars = m - 1
        var_of = lambda j: j - 1  # b_j for j in 1..m-1
    else:
        num_vars = m
        var_of = lambda j: j

    rows = []
    for k in range(D + m, -1, -1):
        coeffs: dict[int, int] = {}
        constant = 0
        j_lo = max(0, k - D)
        j_hi = min(m, k)
        for j in range(j_lo, j_hi + 1):
            pc = P.coeffs[k - j]
            if pc == 0:
                continue
            if j == m:
                constant += pc
            elif j == 0 and fixed_b0 is not None:
                constant += pc * fixed_b0
            else:
                v = var_of(j)
                coeffs[v] = coeffs.get(v, 0) + pc
        bound = (1, 1) if k in (0, D + m) else (0, 1)
        rows.append(Row(coeffs, constant, bound[0], bound[1]))
    return LinearSystem(num_vars, tuple(rows))


def build_remainder_system(g: IntPolynomial, d: int) -> LinearSystem:
    """Equality rows forcing (x^d + sum a_i x^i + 1) mod g to vanish.

    Unknowns are the binary inner coefficients a_1 .. a_{d-1} (variable j is
    a_{j+1}); the constant term and the leading coefficient are fixed at 1.
    There is one equality row per remainder coordinate, highest first, built
    from an exact reduction table of x^i mod g.
    """
    n = g.degree
    if not g.is_monic() or not isinstance(n, int) or n < 1:
        raise InvalidConfig("g must be monic of degree >= 1")
    if d < 1:
        raise InvalidConfig("total degree d must be >= 1")
    # reduction[i] = coordinates of x^i mod g
    reduction: list[tuple[int, ...]] = []
    cur = [0] * n
    cur[0] = 1
    reduction.append(tuple(cur))
    neg_tail = tuple(-c for c in g.coeffs[:n])
    for _ in range(d):
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            for i in range(n):
                nxt[i] += top * neg_tail[i]
        cur = nxt
        reduction.append(tuple(cur))

    num_vars = max(0, d - 1)
    rows = []
    for j in range(n - 1, -1, -1):
        coeffs: dict[int, int] = {}
        constant = reduction[0][j] + reduction[d][j]
        for i in range(1, d):
            c = reduction[i][j]
            if c != 0:
                coeffs[i - 1] = c
        rows.append(Row(coeffs, constant, 0, 0))
    domains = ((0, 1),) * num_vars
    return LinearSystem(num_vars, tuple(rows), domains)


def _cofactor_from_assignment(
    P: IntPolynomial, m: int, assignment: tuple[int, ...]
) -> IntPolynomial:
    p0 = P.constant_term()
    if p0 in (1, -1):
        coeffs = [p0] + list(assignment) + [1]
    else:
        coeffs = list(assignment) + [1]
    return IntPolynomial(coeffs)


def _product_from_assignment(d: int, assignment: tuple[int, ...]) -> NewmanPolynomial:
    mask = 1 | (1 << d)
    for j, a in enumerate(assignment):
        if a:
            mask |= 1 << (j + 1)
    return NewmanPolynomial(mask)


def _value_range_at(t: int, d: int) -> tuple[int, int]:
    """Attainable [min, max] of N(t) over products N of degree d."""
    base = t**d + 1
    lo = hi = base
    for i in range(1, d):
        v = t**i
        if v > 0:
            hi += v
        else:
            lo += v
    return lo, hi


def _prefilter_refutes(P: IntPolynomial, d: int) -> bool:
    """True when no degree-d product can satisfy both value congruences."""
    for t in (2, -2):
        M = abs(P(t))
        if M == 0:
            continue
        lo, hi = _value_range_at(t, d)
        if hi // M < -((-lo) // M):  # no multiple of M in [lo, hi]
            return True
    return False


def _verify_witness(
    P: IntPolynomial, product: NewmanPolynomial, cofactor: IntPolynomial
) -> None:
    prod_poly = product.to_polynomial()
    if (P * cofactor).coeffs != prod_poly.coeffs:
        raise RuntimeError("internal error: witness product does not multiply out")
    quot, rem = prod_poly.divrem(P)
    if not rem.is_zero() or quot.coeffs != cofactor.coeffs:
        raise RuntimeError("internal error: witness fails exact division")
    for t in (2, -2):
        if P(t) != 0 and prod_poly(t) % P(t) != 0:
            raise RuntimeError("internal error: witness fails value congruence")


def find_newman_multiple(
    p: IntPolynomial, config: Optional[SearchConfig] = None, **kwargs
) -> SearchResult:
    """Find the minimal-degree Newman multiple of p**power, or refute degrees.

    Sweeps total degrees in ascending order, so the first witness found has
    minimal degree among the degrees actually examined.  Every witness is
    re-verified by exact arithmetic before being reported.  Degrees whose
    solve hit a cap are recorded as unknown and never counted as refuted.

    Raises :class:`PositiveRealRoot` when p has a positive real root (no
    multiple with nonnegative coefficients and constant term 1 can exist)
    and :class:`InvalidConfig` for non-monic input or inconsistent settings.
    """
    if kwargs:
        base = config or SearchConfig()
        config = replace(base, **kwargs)
    config = config or SearchConfig()
    deg = p.degree
    if not p.is_monic() or not isinstance(deg, int):
        raise InvalidConfig("input polynomial must be monic")
    if config.power < 1:
        raise InvalidConfig("power must be >= 1")
    if config.max_total_degree < deg * config.power:
        raise InvalidConfig(
            f"max_total_degree {config.max_total_degree} is below "
            f"deg(p)*power = {deg * config.power}"
        )
    start_time = time.perf_counter()

    if deg >= 1 and has_positive_real_root(p):
        raise PositiveRealRoot(p)

    def result(**kw) -> SearchResult:
        return SearchResult(
            polynomial=p,
            power=config.power,
            wall_time=time.perf_counter() - start_time,
            **kw,
        )

    # A Newman polynomial is its own minimal multiple.
    if config.power == 1 and p.is_newman():
        product = NewmanPolynomial.from_polynomial(p)
        return result(
            status=SearchStatus.FOUND,
            product=product,
            cofactor=IntPolynomial((1,)),
            total_degree=deg,
            frontier=deg - 1,
            degree_outcomes={deg: "found"},
            witnesses={deg: product},
        )

    P = p**config.power
    D = P.degree

    # The constant term of any multiple with constant term 1 divides 1.
    if P.constant_term() not in (1, -1):
        return result(
            status=SearchStatus.NOT_FOUND_UP_TO_DEGREE,
            frontier=config.max_total_degree,
        )

    sweep_start = D if config.binary_cofactor else D + 1
    if config.min_total_degree is not None:
        sweep_start = max(sweep_start, config.min_total_degree)
    window_skips_low = config.min_total_degree is not None and config.min_total_degree > D

    options = config.solve_options
    if options is None:
        options = SolveOptions(branch_high_index_first=config.binary_cofactor)

    outcomes: dict[int, str] = {}
    witnesses: dict[int, NewmanPolynomial] = {}
    unknowns: list[int] = []
    total_nodes = 0
    first_found: Optional[tuple[int, NewmanPolynomial, IntPolynomial]] = None

    # Degree D itself carries a multiple exactly when P is Newman (the only
    # monic multiple of degree D is P).  Handle it here so both modes agree.
    p_self_newman = P.is_newman()
    if p_self_newman and not window_skips_low:
        product = NewmanPolynomial.from_polynomial(P)
        outcomes[D] = "found"
        witnesses[D] = product
        first_found = (D, product, IntPolynomial((1,)))
        sweep_start = max(sweep_start, D + 1)

    for total in range(sweep_start, config.max_total_degree + 1):
        if first_found is not None and not config.explore_all_degrees:
            break
        if config.binary_cofactor:
            if config.prefilter and _prefilter_refutes(P, total):
                outcomes[total] = "refuted"
                continue
            system = build_remainder_system(P, total)
        else:
            system = build_cofactor_system(P, total - D)
        out = solve(system, options)
        total_nodes += out.nodes
        if out.status is Status.FEASIBLE:
            if config.binary_cofactor:
                product = _product_from_assignment(total, out.assignment)
                cofactor, _ = product.to_polynomial().divrem(P)
            else:
                cofactor = _cofactor_from_assignment(P, total - D, out.assignment)
                product = NewmanPolynomial.from_polynomial(P * cofactor)
            _verify_witness(P, product, cofactor)
            outcomes[total] = "found"
            witnesses[total] = product
            if first_found is None:
                first_found = (total, product, cofactor)
        elif out.status is Status.INFEASIBLE:
            outcomes[total] = "refuted"
        else:
            outcomes[total] = "unknown"
            unknowns.append(total)

    # Highest prefix of total degrees all soundly refuted.  Degrees below
    # deg(P) cannot carry a monic multiple; degree D is refuted outright when
    # P is not Newman and the sweep covers it.
    if window_skips_low:
        frontier = D - 1
    else:
        if config.binary_cofactor or p_self_newman:
            frontier = D - 1
        else:
            outcomes.setdefault(D, "refuted")
            frontier = D - 1
        probe = frontier + 1
        while outcomes.get(probe) == "refuted":
            frontier = probe
            probe += 1

    if first_found is not None:
        total, product, cofactor = first_found
        return result(
            status=SearchStatus.FOUND,
            product=product,
            cofactor=cofactor,
            total_degree=total,
            frontier=frontier,
            unknown_degrees=tuple(unknowns),
            degree_outcomes=outcomes,
            witnesses=witnesses,
            nodes=total_nodes,
        )
    status = (
        SearchStatus.NOT_FOUND_UP_TO_DEGREE
        if frontier >= config.max_total_degree
        else SearchStatus.EXHAUSTED_WITH_UNKNOWNS
    )
    return result(
        status=status,
        frontier=frontier,
        unknown_degrees=tuple(unknowns),
        degree_outcomes=outcomes,
        witnesses=witnesses,
        nodes=total_nodes,
    )


def sweep_power(
    p: IntPolynomial,
    power: int,
    max_total_degree: int,
    solve_options: Optional[SolveOptions] = None,
    prefilter: bool = False,
) -> SearchResult:
    """Examine every total degree up to ``max_total_degree`` for p**power.

    Unlike the plain search this does not stop at the first witness: each
    degree in range gets its own found/refuted/unknown outcome (binary
    cofactor encoding throughout), which is how per-degree tables of
    multiples are produced.
    """
    config = SearchConfig(
        max_total_degree=max_total_degree,
        power=power,
        binary_cofactor=True,
        prefilter=prefilter,
        explore_all_degrees=True,
        solve_options=solve_options,
    )
    return find_newman_multiple(p, config)
