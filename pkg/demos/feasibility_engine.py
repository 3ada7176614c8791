# The bounded-integer feasibility engine underneath the search.
#
# Systems are rows of integer-weighted sums with interval bounds over
# integer variables with interval domains. Solving interleaves interval
# propagation (tighten domains until a fixpoint) with branching on an
# undecided variable. Everything is exact integer arithmetic.

from newmanpoly import LinearSystem, Row, SolveOptions, Status, propagate, solve

# x0 + x1 in [0, 1], x1 + x2 in [0, 1], x0 + x2 = 1, all vars in [-2, 2]
system = LinearSystem(
    num_vars=3,
    domains=((-2, 2), (-2, 2), (-2, 2)),
    rows=(
        Row(coeffs=((0, 1), (1, 1)), lower=0, upper=1),
        Row(coeffs=((1, 1), (2, 1)), lower=0, upper=1),
        Row(coeffs=((0, 1), (2, 1)), lower=1, upper=1),
    ),
)

tightened = propagate(system)
print("domains after propagation:", tightened)

outcome = solve(system)
print("status:", outcome.status.name)
print("assignment:", outcome.assignment)
print("nodes:", outcome.nodes)
assert outcome.status is Status.FEASIBLE
for row in system.rows:
    s = sum(c * outcome.assignment[i] for i, c in row.coeffs.items())
    assert row.lower <= s <= row.upper

# infeasible by parity: 2a + 2b = 7 has no integer solution. The rounded
# division in bound tightening (2a in [1,7] gives a in [1,3], and so on)
# empties a domain at the fixpoint, no branching needed.
bad = LinearSystem(
    num_vars=2,
    domains=((0, 3), (0, 3)),
    rows=(Row(coeffs=((0, 2), (1, 2)), lower=7, upper=7),),
)
outcome = solve(bad)
print("parity instance:", outcome.status.name, "after", outcome.nodes, "nodes")
assert outcome.status is Status.INFEASIBLE
