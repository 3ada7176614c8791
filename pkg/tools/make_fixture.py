"""Generate tests/data/mahler_small_list.txt.

Enumerates monic reciprocal even-degree polynomials with coefficients in
{-1, 0, 1} and Mahler measure below 1.3, extends them to higher degrees by
substituting x -> x^k (which preserves the measure, reciprocality, and
monicity), and keeps entries up to degree 44.

Entries without a positive real root are validated: the degree-by-degree
search must find a Newman multiple quickly, so downstream runs over any
sample of the fixture stay within their time budgets.  Candidates that
exceed the per-entry limit are dropped; validation stops early once the
target count is reached.  A handful of entries with a positive real root
are kept unvalidated to exercise the exclusion path.
"""

import itertools
import sys
import time
from collections import defaultdict
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from newmanpoly.feasibility import SolveOptions
from newmanpoly.listfile import ListEntry, write_list
from newmanpoly.polynomial import IntPolynomial
from newmanpoly.roots import has_positive_real_root, mahler_measure
from newmanpoly.search import SearchConfig, SearchStatus, find_newman_multiple

MEASURE_BOUND = 1.3
MAX_DEGREE = 44
MAX_BASE_HALF = 7  # enumerate base degrees 2..14
TARGET_VALIDATED = 72
MAX_POSITIVE_ROOT = 6
DEGREE_HEADROOM = 50  # search multiples up to entry degree + headroom
VALIDATE_TIME_LIMIT = 15.0  # seconds per entry; slower entries are dropped


def enumerate_bases():
    """Monic reciprocal polynomials from mirrored {-1,0,1} half vectors."""
    for d in range(1, MAX_BASE_HALF + 1):
        for tail in itertools.product((-1, 0, 1), repeat=d):
            half = (1,) + tail  # a_0 .. a_d
            coeffs = half + half[-2::-1]
            yield IntPolynomial(coeffs)


def candidate_order(kept):
    """Round-robin over degree buckets so kept entries span the range."""
    buckets = defaultdict(list)
    for coeffs in kept:
        buckets[len(coeffs) - 1].append(coeffs)
    for degree in buckets:
        buckets[degree].sort()
    queues = [buckets[d] for d in sorted(buckets, reverse=True)]
    for layer in itertools.zip_longest(*queues):
        for coeffs in layer:
            if coeffs is not None:
                yield coeffs


def main() -> int:
    kept: dict[tuple, float] = {}
    scanned = 0
    for p in enumerate_bases():
        scanned += 1
        m = float(mahler_measure(p).value)
        if m < MEASURE_BOUND:
            kept[p.coeffs] = m
    print(f"enumerated {scanned} bases, {len(kept)} below the measure bound",
          flush=True)

    for coeffs, m in list(kept.items()):
        p = IntPolynomial(coeffs)
        for k in range(2, MAX_DEGREE // p.degree + 1):
            q = p.substitute_power(k)
            if q.degree <= MAX_DEGREE and q.coeffs not in kept:
                kept[q.coeffs] = m
    print(f"{len(kept)} candidates after power substitutions", flush=True)

    entries = []
    validated = 0
    with_root = 0
    dropped = 0
    # per-solve budget keeps any single entry bounded even when a degree
    # window stalls; post-hoc limit drops entries that crawl across windows
    options = SolveOptions(
        max_nodes=300_000, time_budget=1.5, branch_high_index_first=True
    )
    start = time.perf_counter()
    for coeffs in candidate_order(kept):
        if validated >= TARGET_VALIDATED:
            break
        p = IntPolynomial(coeffs)
        m = kept[coeffs]
        if has_positive_real_root(p):
            if with_root < MAX_POSITIVE_ROOT:
                with_root += 1
                entries.append(ListEntry(p.degree, m, coeffs))
            continue
        config = SearchConfig(
            max_total_degree=p.degree + DEGREE_HEADROOM,
            binary_cofactor=True,
            solve_options=options,
        )
        t0 = time.perf_counter()
        result = find_newman_multiple(p, config)
        elapsed = time.perf_counter() - t0
        if result.status is SearchStatus.FOUND and elapsed <= VALIDATE_TIME_LIMIT:
            validated += 1
            entries.append(ListEntry(p.degree, m, coeffs))
            print(
                f"  kept degree {p.degree} found at {result.total_degree} "
                f"in {elapsed:.2f}s ({validated}/{TARGET_VALIDATED}, "
                f"total {time.perf_counter() - start:.0f}s)",
                flush=True,
            )
        else:
            dropped += 1
            print(
                f"  dropped degree {p.degree} {list(coeffs)}: "
                f"{result.status.name} after {elapsed:.1f}s",
                flush=True,
            )
    print(f"{len(entries)} entries kept, {dropped} dropped by validation",
          flush=True)

    entries.sort(key=lambda e: (e.degree, e.coeffs))
    out = Path(__file__).resolve().parents[1] / "tests" / "data" / "mahler_small_list.txt"
    out.parent.mkdir(parents=True, exist_ok=True)
    header = (
        "# monic reciprocal polynomials of even degree <= 44 with Mahler\n"
        "# measure below 1.3, full coefficient layout, constant term first:\n"
        "# degree  measure  a_0 .. a_n\n"
    )
    out.write_text(header + write_list(entries, fmt="B"))
    degrees = sorted({e.degree for e in entries})
    print(f"wrote {out} ({len(entries)} entries, degrees {degrees}, "
          f"{with_root} with a positive real root)", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
