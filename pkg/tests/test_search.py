"""System builders and the degree-by-degree multiple search.

The builders are linear encodings of polynomial multiplication and of
Euclidean remainders, so both are checked against direct polynomial
arithmetic on arbitrary assignments, not just on solutions.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newmanpoly.feasibility import SolveOptions, Status, solve
from newmanpoly.polynomial import IntPolynomial, NewmanPolynomial, parse_polynomial
from newmanpoly.roots import PositiveRealRoot
from newmanpoly.search import (
    InvalidConfig,
    SearchConfig,
    SearchStatus,
    build_cofactor_system,
    build_remainder_system,
    find_newman_multiple,
    sweep_power,
)

P16 = parse_polynomial("x^16+x^15-x^11-x^8-x^5+x+1")
Q22 = parse_polynomial("x^22+x^20+x^18+x^15+x^13+2x^11+x^9+x^7+x^4+x^2+1")
LEHMER = parse_polynomial("x^10-x^9+x^7-x^6+x^5-x^4+x^3-x+1")


def cofactor_from_assignment(p, m, assignment):
    """Reconstruct the monic cofactor encoded by a system assignment."""
    if p.constant_term() == 1:
        low = [1]
    else:
        low = [-1]
    coeffs = low + list(assignment) + [1]
    assert len(coeffs) == m + 1
    return IntPolynomial(coeffs)


# --------------------------------------------------------- cofactor builder


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(-3, 3), min_size=0, max_size=5),
    st.integers(2, 6),
    st.data(),
)
def test_cofactor_rows_encode_the_product(mid, m, data):
    # random monic p with p(0) = +-1
    const = data.draw(st.sampled_from([1, -1]))
    p = IntPolynomial([const] + mid + [1])
    system = build_cofactor_system(p, m)
    assert system.num_vars == m - 1
    assignment = tuple(
        data.draw(st.integers(-4, 4), label=f"b{j+1}") for j in range(m - 1)
    )
    q = cofactor_from_assignment(p, m, assignment)
    product = p * q
    # every row evaluates to exactly the matching product coefficient
    degrees = list(range(p.degree + m, -1, -1))
    assert len(system.rows) == len(degrees)
    for row, k in zip(system.rows, degrees):
        assert row.evaluate(assignment) == product.coefficient(k), (p, q, k)


def test_cofactor_bounds_pin_ends_and_allow_interior():
    system = build_cofactor_system(P16, 22)
    degrees = list(range(38, -1, -1))
    for row, k in zip(system.rows, degrees):
        if k in (0, 38):
            assert (row.lower, row.upper) == (1, 1)
        else:
            assert (row.lower, row.upper) == (0, 1)


def test_worked_cofactor_is_feasible_in_its_system():
    """The known degree-22 cofactor satisfies every row of its system."""
    system = build_cofactor_system(P16, 22)
    assignment = tuple(Q22.coefficient(j) for j in range(1, 22))
    for row in system.rows:
        assert row.satisfied_by(assignment)


def test_worked_system_shape():
    system = build_cofactor_system(P16, 22)
    assert system.num_vars == 21
    assert len(system.rows) == 39
    # interior unknowns are unbounded integers; only the rows constrain them
    assert all(d == (None, None) for d in system.domains)


def test_cofactor_system_for_negative_constant():
    p = parse_polynomial("x^3+x-1")  # p(0) = -1 forces q(0) = -1
    system = build_cofactor_system(p, 3)
    assignment = (0, 0)
    q = cofactor_from_assignment(p, 3, assignment)
    assert q.constant_term() == -1
    product = p * q
    for row, k in zip(system.rows, range(6, -1, -1)):
        assert row.evaluate(assignment) == product.coefficient(k)


# -------------------------------------------------------- remainder builder


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=1, max_size=3), st.integers(2, 9), st.data())
def test_remainder_rows_vanish_iff_division_is_exact(mid, d, data):
    g = IntPolynomial([data.draw(st.sampled_from([1, -1]))] + mid + [1])
    if d <= g.degree:
        return
    system = build_remainder_system(g, d)
    assert system.num_vars == d - 1
    assert all(dom == (0, 1) for dom in system.domains)
    bits = tuple(data.draw(st.integers(0, 1), label=f"a{j+1}") for j in range(d - 1))
    n = IntPolynomial((1,) + bits + (1,))
    _, rem = n.divrem(g)
    rows_zero = all(row.evaluate(bits) == 0 for row in system.rows)
    assert rows_zero == rem.is_zero(), (g, n)


def test_remainder_system_exhaustive_small_case():
    g = parse_polynomial("x^2-x-1")
    d = 6
    system = build_remainder_system(g, d)
    solutions = set()
    for mask in range(1 << (d - 1)):
        bits = tuple((mask >> j) & 1 for j in range(d - 1))
        n = IntPolynomial((1,) + bits + (1,))
        _, rem = n.divrem(g)
        if rem.is_zero():
            solutions.add(bits)
        assert all(row.evaluate(bits) == 0 for row in system.rows) == rem.is_zero()
    outcome = solve(system)
    assert (outcome.status is Status.FEASIBLE) == bool(solutions)
    if solutions:
        assert tuple(outcome.assignment) in solutions


# ----------------------------------------------------------------- search


def test_worked_example_search():
    result = find_newman_multiple(P16, max_total_degree=50)
    assert result.status is SearchStatus.FOUND
    assert result.total_degree == 38
    assert result.product.to_polynomial() == P16 * result.cofactor
    assert result.product.to_polynomial().is_newman()
    # every smaller candidate degree is refuted outright, none merely unknown
    for d in range(17, 38):
        assert result.degree_outcomes[d] == "refuted"
    assert result.unknown_degrees == ()


def test_worked_example_binary_mode_agrees():
    """Both encodings answer the same question per degree, so the minimal
    found degree must match even if the discovered witnesses differ."""
    full = find_newman_multiple(P16, max_total_degree=40)
    binary = find_newman_multiple(P16, max_total_degree=40, binary_cofactor=True)
    assert full.total_degree == binary.total_degree == 38
    for result in (full, binary):
        prod = result.product.to_polynomial()
        _, r = prod.divrem(P16)
        assert r.is_zero()
    for d in range(17, 38):
        assert binary.degree_outcomes[d] == "refuted"


def test_self_newman_short_circuit():
    p = parse_polynomial("x^3+x+1")
    result = find_newman_multiple(p)
    assert result.status is SearchStatus.FOUND
    assert result.total_degree == 3
    assert result.cofactor == IntPolynomial((1,))
    assert result.product.to_polynomial() == p


def test_even_constant_never_divides():
    result = find_newman_multiple(parse_polynomial("x^2+x+2"), max_total_degree=30)
    assert result.status is SearchStatus.NOT_FOUND_UP_TO_DEGREE
    assert result.frontier == 30
    assert result.witnesses == {}


def test_positive_real_root_is_rejected():
    with pytest.raises(PositiveRealRoot):
        find_newman_multiple(parse_polynomial("x-2"))
    with pytest.raises(PositiveRealRoot):
        find_newman_multiple(parse_polynomial("x^2-3x+1"))


def test_invalid_configs():
    with pytest.raises(InvalidConfig):
        find_newman_multiple(parse_polynomial("2x+1"))  # not monic
    with pytest.raises(InvalidConfig):
        find_newman_multiple(LEHMER, power=0)
    with pytest.raises(InvalidConfig):
        find_newman_multiple(LEHMER, power=2, max_total_degree=19)


def test_found_witnesses_verify():
    p = parse_polynomial("x^4-x^3+x^2-x+1")  # cyclotomic: divides x^10 - ... times
    result = find_newman_multiple(p, max_total_degree=20)
    assert result.status is SearchStatus.FOUND
    prod = result.product.to_polynomial()
    q, r = prod.divrem(p)
    assert r.is_zero() and q == result.cofactor
    assert result.product(2) == prod(2)


def test_explore_all_degrees_collects_witnesses():
    p = parse_polynomial("x^4-x^3+x^2-x+1")
    result = find_newman_multiple(p, max_total_degree=16, explore_all_degrees=True)
    assert result.status is SearchStatus.FOUND
    assert set(result.witnesses) == {
        d for d, o in result.degree_outcomes.items() if o == "found"
    }
    for d, w in result.witnesses.items():
        assert w.degree == d
        _, r = w.to_polynomial().divrem(p)
        assert r.is_zero()


def test_min_total_degree_window():
    p = parse_polynomial("x^4-x^3+x^2-x+1")
    base = find_newman_multiple(p, max_total_degree=30, explore_all_degrees=True)
    lowest = min(base.witnesses)
    windowed = find_newman_multiple(
        p, max_total_degree=30, min_total_degree=lowest + 1, explore_all_degrees=True
    )
    assert lowest not in windowed.witnesses
    assert all(d > lowest for d in windowed.witnesses)


def test_prefilter_preserves_outcomes():
    g = LEHMER * LEHMER
    plain = find_newman_multiple(
        g, max_total_degree=40, binary_cofactor=True, explore_all_degrees=True
    )
    filtered = find_newman_multiple(
        g,
        max_total_degree=40,
        binary_cofactor=True,
        explore_all_degrees=True,
        prefilter=True,
    )
    assert plain.status is filtered.status
    assert plain.witnesses == filtered.witnesses
    assert set(plain.degree_outcomes) == set(filtered.degree_outcomes)
    for d, o in plain.degree_outcomes.items():
        assert (o == "found") == (filtered.degree_outcomes[d] == "found")


def test_sweep_power_square_smoke():
    """The squared Salem polynomial has no Newman multiple in degrees
    50..58 and one exactly at 59.

    The window starts at 57 to keep the run short; the full sweep from
    degree 20 belongs to the long-running acceptance checks.
    """
    config = SearchConfig(
        max_total_degree=59,
        min_total_degree=57,
        power=2,
        binary_cofactor=True,
        explore_all_degrees=True,
    )
    result = find_newman_multiple(LEHMER, config)
    assert result.status is SearchStatus.FOUND
    assert result.total_degree == 59
    assert result.unknown_degrees == ()
    g = LEHMER * LEHMER
    _, r = result.product.to_polynomial().divrem(g)
    assert r.is_zero()
    for d in (57, 58):
        assert result.degree_outcomes[d] == "refuted"


def test_sweep_power_cube_smoke():
    result = sweep_power(LEHMER, 3, 40)
    assert result.status is SearchStatus.NOT_FOUND_UP_TO_DEGREE
    assert result.frontier == 40
    assert result.unknown_degrees == ()


def test_deterministic_results():
    a = find_newman_multiple(P16, max_total_degree=40)
    b = find_newman_multiple(P16, max_total_degree=40)
    assert a.product == b.product
    assert a.nodes == b.nodes
    assert a.degree_outcomes == b.degree_outcomes
