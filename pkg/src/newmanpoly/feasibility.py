"""Bounded-integer linear feasibility: interval propagation plus branch-and-prune.

A :class:`LinearSystem` is a conjunction of two-sided rows
``lower <= constant + sum(c_i * x_i) <= upper`` over integer unknowns with
per-variable domains.  :func:`propagate` tightens the domains to an interval
fixpoint; :func:`solve` decides feasibility by depth-first search, branching
on the tightest domain and pruning every subtree whose interval hull already
violates a row.

Everything is exact integer arithmetic, so outcomes are deterministic and an
``INFEASIBLE`` answer is a proof, not a heuristic.  Feasible answers are
re-verified by substitution before they are returned.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Optional, Sequence

__all__ = [
    "Row",
    "LinearSystem",
    "Status",
    "FeasibilityOutcome",
    "SolveOptions",
    "SystemFormatError",
    "propagate",
    "solve",
    "system_to_text",
    "system_from_text",
]

Bound = Optional[int]  # None encodes an unbounded side


class SystemFormatError(ValueError):
    """A malformed line in the plain-text system format."""

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


@dataclass(frozen=True)
class Row:
    """One two-sided constraint ``lower <= constant + sum(c*x) <= upper``."""

    coeffs: Mapping[int, int]
    constant: int = 0
    lower: int = 0
    upper: int = 0

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", {int(v): int(c) for v, c in dict(self.coeffs).items() if c != 0}
        )
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError(f"row bounds reversed: [{self.lower}, {self.upper}]")

    def evaluate(self, assignment: Sequence[int]) -> int:
        return self.constant + sum(c * assignment[v] for v, c in self.coeffs.items())

    def satisfied_by(self, assignment: Sequence[int]) -> bool:
        value = self.evaluate(assignment)
        if self.lower is not None and value < self.lower:
            return False
        return self.upper is None or value <= self.upper


@dataclass(frozen=True)
class LinearSystem:
    """An integer feasibility problem: rows plus per-variable domains.

    ``domains[v]`` is a pair ``(lo, hi)``; either side may be ``None`` for
    an unbounded direction.  Instances are immutable; solver calls never
    modify them.
    """

    num_vars: int
    rows: tuple[Row, ...]
    domains: tuple[tuple[Bound, Bound], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        doms = tuple(self.domains) if self.domains else ((None, None),) * self.num_vars
        if len(doms) != self.num_vars:
            raise ValueError("domain count does not match num_vars")
        for lo, hi in doms:
            if lo is not None and hi is not None and lo > hi:
                raise ValueError(f"empty domain [{lo}, {hi}]")
        object.__setattr__(self, "domains", doms)
        for row in self.rows:
            for v in row.coeffs:
                if not 0 <= v < self.num_vars:
                    raise ValueError(f"row references unknown variable x{v}")

    def with_domains(self, domains: Iterable[tuple[Bound, Bound]]) -> "LinearSystem":
        return LinearSystem(self.num_vars, self.rows, tuple(domains))


class Status(Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class FeasibilityOutcome:
    """Result of :func:`solve` with search statistics."""

    status: Status
    assignment: Optional[tuple[int, ...]] = None
    nodes: int = 0
    propagation_rounds: int = 0
    wall_time: float = 0.0


@dataclass(frozen=True)
class SolveOptions:
    """Caps and heuristic configuration for :func:`solve`.

    ``max_nodes`` bounds the number of branch decisions; ``time_budget`` is an
    optional wall-clock cap in seconds (off by default so that results depend
    only on the input).  Variables with no finite bounds after propagation are
    clamped to ``[-clamp_bound, clamp_bound]``; exhausting a clamped search
    reports UNKNOWN rather than INFEASIBLE.  ``branch_high_index_first``
    flips the index tie-break between equally tight domains, which suits
    systems whose high-index columns carry the dominant coefficients.
    """

    max_nodes: int = 10_000_000
    time_budget: Optional[float] = None
    clamp_bound: int = 64
    branch_high_index_first: bool = False


# ---------------------------------------------------------------------------
# Interval fixpoint over possibly unbounded domains.


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _fixpoint(system: LinearSystem, counter: Optional[list] = None):
    """Tighten domains to an interval fixpoint.

    Returns the tightened domain list, or None when some row or domain is
    proven empty.  ``counter`` (if given) accumulates the number of row
    revisions in ``counter[0]``.
    """
    lo = [d[0] for d in system.domains]
    hi = [d[1] for d in system.domains]
    entries = [sorted(r.coeffs.items()) for r in system.rows]
    var_rows: list[list[int]] = [[] for _ in range(system.num_vars)]
    for ri, ents in enumerate(entries):
        for v, _ in ents:
            var_rows[v].append(ri)

    from collections import deque

    queue = deque(range(len(system.rows)))
    queued = [True] * len(system.rows)
    revisions = 0
    # Bound tightening converges but may crawl on unbounded chains; the guard
    # only stops further tightening, which is always sound.
    max_revisions = 2000 * max(1, len(system.rows)) + 10000

    while queue:
        ri = queue.popleft()
        queued[ri] = False
        revisions += 1
        if revisions > max_revisions:
            break
        row = system.rows[ri]
        ents = entries[ri]

        # Row interval: finite partial sums plus counts of unbounded sides.
        fmin = fmax = row.constant
        inf_min = inf_max = 0
        for v, c in ents:
            l, h = (lo[v], hi[v]) if c > 0 else (hi[v], lo[v])
            if l is None:
                inf_min += 1
            else:
                fmin += c * l
            if h is None:
                inf_max += 1
            else:
                fmax += c * h
        if row.upper is not None and inf_min == 0 and fmin > row.upper:
            return None
        if row.lower is not None and inf_max == 0 and fmax < row.lower:
            return None

        for v, c in ents:
            pmin_b, pmax_b = (lo[v], hi[v]) if c > 0 else (hi[v], lo[v])
            # Interval of the row minus this variable's own contribution.
            if pmin_b is None:
                rest_min = fmin if inf_min == 1 else None
                if inf_min > 1:
                    rest_min = None
            else:
                rest_min = (fmin - c * pmin_b) if inf_min == 0 else None
            if pmax_b is None:
                rest_max = fmax if inf_max == 1 else None
            else:
                rest_max = (fmax - c * pmax_b) if inf_max == 0 else None

            # c*x >= lower - rest_max ; c*x <= upper - rest_min
            cx_lo = None if (rest_max is None or row.lower is None) else row.lower - rest_max
            cx_hi = None if (rest_min is None or row.upper is None) else row.upper - rest_min
            if c > 0:
                new_lo = None if cx_lo is None else _ceil_div(cx_lo, c)
                new_hi = None if cx_hi is None else cx_hi // c
            else:
                new_lo = None if cx_hi is None else _ceil_div(cx_hi, c)
                new_hi = None if cx_lo is None else cx_lo // c

            changed = False
            if new_lo is not None and (lo[v] is None or new_lo > lo[v]):
                lo[v] = new_lo
                changed = True
            if new_hi is not None and (hi[v] is None or new_hi < hi[v]):
                hi[v] = new_hi
                changed = True
            if changed:
                if lo[v] is not None and hi[v] is not None and lo[v] > hi[v]:
                    return None
                for rj in var_rows[v]:
                    if not queued[rj]:
                        queued[rj] = True
                        queue.append(rj)
                if not queued[ri]:
                    queued[ri] = True
                    queue.append(ri)
                break  # row sums are stale; reprocess this row afresh
    if counter is not None:
        counter[0] += revisions
    return list(zip(lo, hi))


def propagate(system: LinearSystem) -> Optional[LinearSystem]:
    """Tighten every variable domain to the interval fixpoint.

    Returns a new system with tightened domains, or ``None`` when the system
    is proven infeasible by intervals alone.  Never removes an integer
    solution: each bound update only excludes values that violate some row
    against the interval hull of the others.
    """
    doms = _fixpoint(system)
    if doms is None:
        return None
    return system.with_domains(doms)


# ---------------------------------------------------------------------------
# Depth-first branch and prune.


class _Engine:
    """Mutable search state over finite domains with incremental row sums."""

    def __init__(self, system: LinearSystem, lo: list[int], hi: list[int]):
        self.system = system
        self.n = system.num_vars
        self.lo = lo
        self.hi = hi
        # Rows as flat lists sorted by |coefficient| descending so the scan
        # hits the variables that can actually tighten first.
        self.row_entries = [
            sorted(r.coeffs.items(), key=lambda vc: (-abs(vc[1]), vc[0]))
            for r in system.rows
        ]
        self.row_lower = [r.lower for r in system.rows]
        self.row_upper = [r.upper for r in system.rows]
        self.var_rows: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for ri, ents in enumerate(self.row_entries):
            for v, c in ents:
                self.var_rows[v].append((ri, c))
        self.smin = []
        self.smax = []
        for ri, r in enumerate(system.rows):
            mn = mx = r.constant
            for v, c in self.row_entries[ri]:
                if c > 0:
                    mn += c * lo[v]
                    mx += c * hi[v]
                else:
                    mn += c * hi[v]
                    mx += c * lo[v]
            self.smin.append(mn)
            self.smax.append(mx)
        # A missing row bound is vacuous over these finite domains: the row's
        # own initial interval can never be escaped, so it serves as the bound.
        for ri in range(len(system.rows)):
            if self.row_lower[ri] is None:
                self.row_lower[ri] = self.smin[ri]
            if self.row_upper[ri] is None:
                self.row_upper[ri] = self.smax[ri]
        self.trail: list[tuple[int, int, int]] = []
        self.unfixed = sum(1 for v in range(self.n) if lo[v] < hi[v])
        from collections import deque

        self.queue = deque()
        self.queued = [False] * len(system.rows)
        self.rounds = 0

    def enqueue_var(self, v: int) -> None:
        for ri, _ in self.var_rows[v]:
            if not self.queued[ri]:
                self.queued[ri] = True
                self.queue.append(ri)

    def set_bounds(self, v: int, new_lo: int, new_hi: int) -> None:
        old_lo, old_hi = self.lo[v], self.hi[v]
        if new_lo == old_lo and new_hi == old_hi:
            return
        self.trail.append((v, old_lo, old_hi))
        for ri, c in self.var_rows[v]:
            if c > 0:
                self.smin[ri] += c * (new_lo - old_lo)
                self.smax[ri] += c * (new_hi - old_hi)
            else:
                self.smin[ri] += c * (new_hi - old_hi)
                self.smax[ri] += c * (new_lo - old_lo)
        self.lo[v], self.hi[v] = new_lo, new_hi
        if old_lo < old_hi and new_lo == new_hi:
            self.unfixed -= 1

    def undo_to(self, mark: int) -> None:
        while len(self.trail) > mark:
            v, old_lo, old_hi = self.trail.pop()
            new_lo, new_hi = self.lo[v], self.hi[v]
            for ri, c in self.var_rows[v]:
                if c > 0:
                    self.smin[ri] += c * (old_lo - new_lo)
                    self.smax[ri] += c * (old_hi - new_hi)
                else:
                    self.smin[ri] += c * (old_hi - new_hi)
                    self.smax[ri] += c * (old_lo - new_lo)
            self.lo[v], self.hi[v] = old_lo, old_hi
            if new_lo == new_hi and old_lo < old_hi:
                self.unfixed += 1

    def propagate_queue(self) -> bool:
        """Drain the row worklist; False on a proven-empty row or domain."""
        lo, hi = self.lo, self.hi
        while self.queue:
            ri = self.queue.popleft()
            self.queued[ri] = False
            self.rounds += 1
            L, U = self.row_lower[ri], self.row_upper[ri]
            mn, mx = self.smin[ri], self.smax[ri]
            if mn > U or mx < L:
                self.queue.clear()
                for i in range(len(self.queued)):
                    self.queued[i] = False
                return False
            if mn >= L and mx <= U:
                continue  # row entailed; nothing can tighten
            threshold = min(mx - L, U - mn)
            for v, c in self.row_entries[ri]:
                w = hi[v] - lo[v]
                if w == 0:
                    continue
                ac = c if c > 0 else -c
                if ac * w <= threshold:
                    continue  # cannot cut into this variable's range
                if c > 0:
                    pmin = c * lo[v]
                    pmax = c * hi[v]
                else:
                    pmin = c * hi[v]
                    pmax = c * lo[v]
                rest_min = mn - pmin
                rest_max = mx - pmax
                cx_lo = L - rest_max
                cx_hi = U - rest_min
                if c > 0:
                    nl = _ceil_div(cx_lo, c)
                    nh = cx_hi // c
                else:
                    nl = _ceil_div(cx_hi, c)
                    nh = cx_lo // c
                if nl < lo[v]:
                    nl = lo[v]
                if nh > hi[v]:
                    nh = hi[v]
                if nl > nh:
                    self.queue.clear()
                    for i in range(len(self.queued)):
                        self.queued[i] = False
                    return False
                if nl > lo[v] or nh < hi[v]:
                    self.set_bounds(v, nl, nh)
                    self.enqueue_var(v)
                    mn, mx = self.smin[ri], self.smax[ri]
                    if mn > U or mx < L:
                        self.queue.clear()
                        for i in range(len(self.queued)):
                            self.queued[i] = False
                        return False
                    threshold = min(mx - L, U - mn)
        return True


def _candidates(lo: int, hi: int) -> list[tuple[int, int]]:
    """Branch alternatives for a domain, in exploration order.

    Narrow domains enumerate values by ascending absolute value with positive
    before negative (0, 1, -1, 2, -2, ...).  Wide domains split at the
    midpoint, trying the half nearer zero first.
    """
    width = hi - lo
    if width <= 4:
        vals = sorted(range(lo, hi + 1), key=lambda x: (abs(x), 0 if x >= 0 else 1))
        return [(x, x) for x in vals]
    mid = (lo + hi) // 2
    a, b = (lo, mid), (mid + 1, hi)
    near_a = min(max(0, lo), mid)
    near_b = min(max(0, mid + 1), hi)
    return [a, b] if abs(near_a) <= abs(near_b) else [b, a]


def solve(system: LinearSystem, options: Optional[SolveOptions] = None) -> FeasibilityOutcome:
    """Decide integer feasibility of ``system`` by branch and prune.

    FEASIBLE outcomes carry a full assignment, re-verified by exact
    substitution into every row before returning.  INFEASIBLE is only
    reported after an exhaustive search over the propagated domains with no
    artificial clamping; searches that clamped an unbounded variable or hit
    a cap report UNKNOWN.  With a fixed option set the outcome and the
    statistics are identical run to run.
    """
    options = options or SolveOptions()
    start = time.perf_counter()
    counter = [0]
    doms = _fixpoint(system, counter)
    if doms is None:
        return FeasibilityOutcome(
            Status.INFEASIBLE,
            nodes=0,
            propagation_rounds=counter[0],
            wall_time=time.perf_counter() - start,
        )

    clamped = False
    lo: list[int] = []
    hi: list[int] = []
    for l, h in doms:
        if l is None:
            l = -options.clamp_bound
            clamped = True
        if h is None:
            h = options.clamp_bound
            clamped = True
        if l > h:  # a clamp can only shrink, never invert a finite domain
            l, h = h, l
        lo.append(l)
        hi.append(h)

    eng = _Engine(system, lo, hi)
    eng.rounds = counter[0]
    for ri in range(len(system.rows)):
        eng.queued[ri] = True
        eng.queue.append(ri)

    nodes = 0
    high_first = options.branch_high_index_first
    stack: list[list] = []  # [var, candidates, index, trail_mark]

    def outcome(status: Status, assignment=None) -> FeasibilityOutcome:
        return FeasibilityOutcome(
            status,
            assignment=assignment,
            nodes=nodes,
            propagation_rounds=eng.rounds,
            wall_time=time.perf_counter() - start,
        )

    while True:
        feasible_here = eng.propagate_queue()
        if feasible_here:
            if eng.unfixed == 0:
                assignment = tuple(eng.lo)
                # Unconditional re-verification by substitution.
                for row in system.rows:
                    if not row.satisfied_by(assignment):
                        raise RuntimeError(
                            "internal error: propagation accepted an assignment "
                            "that fails exact substitution"
                        )
                return outcome(Status.FEASIBLE, assignment)
            best_v = -1
            best_w = None
            for v in range(eng.n):
                w = eng.hi[v] - eng.lo[v]
                if w == 0:
                    continue
                if best_w is None or w < best_w:
                    best_w, best_v = w, v
                elif w == best_w and high_first:
                    best_v = v  # later index wins ties
            cands = _candidates(eng.lo[best_v], eng.hi[best_v])
            stack.append([best_v, cands, 0, len(eng.trail)])
            nodes += 1
            if nodes > options.max_nodes:
                return outcome(Status.UNKNOWN)
            if options.time_budget is not None and nodes % 1024 == 0:
                if time.perf_counter() - start > options.time_budget:
                    return outcome(Status.UNKNOWN)
            eng.set_bounds(best_v, *cands[0])
            eng.enqueue_var(best_v)
            continue

        while stack:
            frame = stack[-1]
            v, cands, idx, mark = frame
            eng.undo_to(mark)
            idx += 1
            frame[2] = idx
            if idx < len(cands):
                nodes += 1
                if nodes > options.max_nodes:
                    return outcome(Status.UNKNOWN)
                if options.time_budget is not None and nodes % 1024 == 0:
                    if time.perf_counter() - start > options.time_budget:
                        return outcome(Status.UNKNOWN)
                eng.set_bounds(v, *cands[idx])
                eng.enqueue_var(v)
                break
            stack.pop()
        else:
            return outcome(Status.UNKNOWN if clamped else Status.INFEASIBLE)


# ---------------------------------------------------------------------------
# Plain-text system format (debugging aid).
#
#   vars 3
#   domain 0 0 1
#   domain 2 -inf 5
#   0 <= 1*x0 + -1*x2 + 1 <= 1
#
# Domains default to unbounded and are written only when they are not.


def _bound_text(b: Bound, side: str) -> str:
    if b is None:
        return "-inf" if side == "lo" else "inf"
    return str(b)


def _parse_bound(tok: str, line_number: int) -> Bound:
    if tok in ("-inf", "inf"):
        return None
    try:
        return int(tok)
    except ValueError:
        raise SystemFormatError(line_number, f"bad bound {tok!r}") from None


def system_to_text(system: LinearSystem) -> str:
    lines = [f"vars {system.num_vars}"]
    for v, (l, h) in enumerate(system.domains):
        if l is not None or h is not None:
            lines.append(f"domain {v} {_bound_text(l, 'lo')} {_bound_text(h, 'hi')}")
    for row in system.rows:
        terms = [f"{c}*x{v}" for v, c in sorted(row.coeffs.items())]
        if row.constant != 0 or not terms:
            terms.append(str(row.constant))
        lower = "-inf" if row.lower is None else row.lower
        upper = "inf" if row.upper is None else row.upper
        lines.append(f"{lower} <= {' + '.join(terms)} <= {upper}")
    return "\n".join(lines) + "\n"


def system_from_text(text: str) -> LinearSystem:
    num_vars = None
    domains: dict[int, tuple[Bound, Bound]] = {}
    rows: list[Row] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "vars":
            if num_vars is not None:
                raise SystemFormatError(ln, "duplicate vars header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise SystemFormatError(ln, "expected 'vars N'")
            num_vars = int(parts[1])
            continue
        if num_vars is None:
            raise SystemFormatError(ln, "missing 'vars N' header")
        if parts[0] == "domain":
            if len(parts) != 4 or not parts[1].isdigit():
                raise SystemFormatError(ln, "expected 'domain V LO HI'")
            v = int(parts[1])
            if v >= num_vars:
                raise SystemFormatError(ln, f"domain for unknown variable x{v}")
            domains[v] = (_parse_bound(parts[2], ln), _parse_bound(parts[3], ln))
            continue
        pieces = line.split("<=")
        if len(pieces) != 3:
            raise SystemFormatError(ln, "expected 'LO <= terms <= HI'")
        lower = _parse_bound(pieces[0].strip(), ln)
        upper = _parse_bound(pieces[2].strip(), ln)
        coeffs: dict[int, int] = {}
        constant = 0
        for term in pieces[1].split("+"):
            term = term.strip()
            if not term:
                raise SystemFormatError(ln, "empty term")
            if "*" in term:
                c_txt, v_txt = term.split("*", 1)
                v_txt = v_txt.strip()
                if not v_txt.startswith("x") or not v_txt[1:].isdigit():
                    raise SystemFormatError(ln, f"bad variable {v_txt!r}")
                v = int(v_txt[1:])
                if v >= num_vars:
                    raise SystemFormatError(ln, f"row references unknown variable x{v}")
                try:
                    c = int(c_txt.strip())
                except ValueError:
                    raise SystemFormatError(ln, f"bad coefficient {c_txt!r}") from None
                coeffs[v] = coeffs.get(v, 0) + c
            else:
                try:
                    constant += int(term)
                except ValueError:
                    raise SystemFormatError(ln, f"bad constant {term!r}") from None
        try:
            rows.append(Row(coeffs, constant, lower, upper))
        except ValueError as exc:
            raise SystemFormatError(ln, str(exc)) from None
    if num_vars is None:
        raise SystemFormatError(0, "missing 'vars N' header")
    doms = tuple(domains.get(v, (None, None)) for v in range(num_vars))
    return LinearSystem(num_vars, tuple(rows), doms)
