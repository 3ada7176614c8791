"""Candidate list files and the batch scan that classifies every entry.

A list file carries one monic reciprocal even-degree polynomial per line as
``degree  mahler-measure  coefficients``.  Two coefficient layouts exist:

* format A: only the lower half is written, constant term up to and
  including the central coefficient; the rest is mirrored.
* format B: the full coefficient vector, constant term first.

The scan classifies each entry and writes the classic result files: entries
that already are Newman polynomials, entries excluded by a positive real
root, entries with a Newman multiple found (polynomial, cofactor, product in
three aligned files), and entries the search could not resolve.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import mpmath as mp

from .feasibility import SolveOptions
from .polynomial import IntPolynomial, NewmanPolynomial
from .roots import complex_roots, has_positive_real_root
from .search import SearchConfig, SearchStatus, find_newman_multiple

__all__ = [
    "ParseError",
    "FormatUndetected",
    "ListEntry",
    "ScanConfig",
    "EntryOutcome",
    "SweepReport",
    "parse_list",
    "write_list",
    "run_scan",
]


class ParseError(ValueError):
    """A list-file line that cannot be parsed, with its line number."""

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


class FormatUndetected(ValueError):
    """Neither layout fits (or both fit) and no explicit format was given."""


@dataclass(frozen=True)
class ListEntry:
    """One parsed line: degree, Mahler measure as printed, coefficients."""

    degree: int
    mahler: float
    coeffs: tuple[int, ...]
    raw_line: str = ""

    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.coeffs)


def _detect_format(num_tokens: int, degree: int) -> Optional[str]:
    full = 2 + degree + 1
    half = 2 + degree // 2 + 1 if degree % 2 == 0 else None
    is_b = num_tokens == full
    is_a = half is not None and num_tokens == half
    if is_a and is_b:
        return None  # ambiguous (degree 0)
    if is_b:
        return "B"
    if is_a:
        return "A"
    return None


def parse_list(
    source: Union[str, Path, Iterable[str]],
    fmt: Optional[str] = None,
) -> list[ListEntry]:
    """Parse a list file (path, text, or line iterable) into entries.

    ``fmt`` forces layout "A" or "B"; otherwise the first data line decides
    by token count, raising :class:`FormatUndetected` when that is ambiguous.
    Lines failing the monic/reciprocal/even-degree invariants raise
    :class:`ParseError` with their line number.
    """
    if isinstance(source, Path):
        lines = source.read_text().splitlines()
    elif isinstance(source, str):
        path = Path(source)
        if "\n" not in source and path.is_file():
            lines = path.read_text().splitlines()
        else:
            lines = source.splitlines()
    else:
        lines = list(source)
    if fmt is not None and fmt not in ("A", "B"):
        raise ValueError(f"format must be 'A' or 'B', not {fmt!r}")

    entries: list[ListEntry] = []
    detected = fmt
    for ln, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) < 3:
            raise ParseError(ln, "expected 'degree measure coefficients...'")
        try:
            degree = int(toks[0])
        except ValueError:
            raise ParseError(ln, f"bad degree {toks[0]!r}") from None
        try:
            mahler = float(toks[1])
        except ValueError:
            raise ParseError(ln, f"bad measure {toks[1]!r}") from None
        if degree < 1:
            raise ParseError(ln, f"degree must be positive, got {degree}")

        if detected is None:
            detected = _detect_format(len(toks), degree)
            if detected is None:
                raise FormatUndetected(
                    f"line {ln}: token count {len(toks)} fits neither layout "
                    f"unambiguously for degree {degree}; pass an explicit format"
                )
        try:
            coeff_toks = [int(t) for t in toks[2:]]
        except ValueError:
            raise ParseError(ln, "coefficients must be integers") from None

        if detected == "A":
            if degree % 2 != 0:
                raise ParseError(ln, f"half layout requires even degree, got {degree}")
            half_len = degree // 2 + 1
            if len(coeff_toks) != half_len:
                raise ParseError(
                    ln,
                    f"expected {half_len} half coefficients for degree {degree}, "
                    f"got {len(coeff_toks)}",
                )
            # central coefficient first, constant term last; mirror the rest
            half_cf = coeff_toks[::-1]
            coeffs = half_cf + half_cf[-2::-1]
        else:
            if len(coeff_toks) != degree + 1:
                raise ParseError(
                    ln,
                    f"expected {degree + 1} coefficients for degree {degree}, "
                    f"got {len(coeff_toks)}",
                )
            coeffs = coeff_toks

        if coeffs[-1] != 1:
            raise ParseError(ln, "entry is not monic")
        if coeffs != coeffs[::-1]:
            raise ParseError(ln, "entry is not reciprocal")
        if degree % 2 != 0:
            raise ParseError(ln, f"entries must have even degree, got {degree}")
        entries.append(ListEntry(degree, mahler, tuple(coeffs), raw_line=raw))
    return entries


def write_list(entries: Sequence[ListEntry], fmt: str = "B") -> str:
    """Render entries back into list-file text (measure printed to 9 decimals)."""
    if fmt not in ("A", "B"):
        raise ValueError(f"format must be 'A' or 'B', not {fmt!r}")
    lines = []
    for e in entries:
        if fmt == "A":
            if e.degree % 2 != 0:
                raise ValueError("half layout requires even degree")
            coeffs = e.coeffs[: e.degree // 2 + 1][::-1]
        else:
            coeffs = e.coeffs
        lines.append(f"{e.degree} {e.mahler:.9f} " + " ".join(str(c) for c in coeffs))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ScanConfig:
    """Settings for :func:`run_scan`.

    ``jobs`` of None consults the NEWMAN_JOBS environment variable and falls
    back to 1.  Output files land in ``out_dir``.  The per-entry search runs
    in cofactor mode up to ``max_total_degree`` with ``solve_options`` caps,
    so a stubborn entry degrades to "unresolved" instead of hanging the scan.
    """

    max_total_degree: int = 1000
    out_dir: Union[str, Path] = "."
    jobs: Optional[int] = None
    solve_options: Optional[SolveOptions] = None

    def effective_jobs(self) -> int:
        if self.jobs is not None:
            return max(1, self.jobs)
        env = os.environ.get("NEWMAN_JOBS", "")
        if env.strip().isdigit() and int(env) >= 1:
            return int(env)
        return 1


@dataclass(frozen=True)
class EntryOutcome:
    """Classification of one scanned entry.

    A per-entry failure (any exception from the classifier) downgrades the
    entry to "unresolved" with the message in ``error``; it never aborts the
    scan as a whole.
    """

    entry: ListEntry
    classification: str  # "newman" | "positive" | "found" | "unresolved"
    positive_root: Optional[float] = None
    total_degree: Optional[int] = None
    product: Optional[NewmanPolynomial] = None
    cofactor: Optional[IntPolynomial] = None
    frontier: int = -1
    unknown_degrees: tuple[int, ...] = ()
    error: str = ""


@dataclass(frozen=True)
class SweepReport:
    """Aggregate of a scan: per-entry outcomes plus counts and wall time."""

    outcomes: tuple[EntryOutcome, ...]
    newman: int
    positive: int
    found: int
    unresolved: int
    wall_time: float

    def __post_init__(self):
        total = self.newman + self.positive + self.found + self.unresolved
        if total != len(self.outcomes):
            raise ValueError("classification counts do not sum to entry count")


def _largest_positive_real_root(p: IntPolynomial) -> float:
    roots = complex_roots(p)
    best = None
    with mp.workdps(roots.precision_dps):
        for enc in roots:
            if abs(enc.value.imag) <= enc.radius and enc.value.real > 0:
                r = float(enc.value.real)
                if best is None or r > best:
                    best = r
    if best is None:
        raise RuntimeError("exact test found a positive root but enclosures show none")
    return best


def _scan_entry(args: tuple[ListEntry, int, Optional[SolveOptions]]) -> EntryOutcome:
    entry, max_total_degree, solve_options = args
    try:
        p = entry.polynomial()
        if p.is_newman():
            return EntryOutcome(entry, "newman")
        if has_positive_real_root(p):
            return EntryOutcome(
                entry, "positive", positive_root=_largest_positive_real_root(p)
            )
        config = SearchConfig(
            max_total_degree=max_total_degree,
            solve_options=solve_options,
        )
        result = find_newman_multiple(p, config)
    except Exception as exc:
        return EntryOutcome(entry, "unresolved", error=f"{type(exc).__name__}: {exc}")
    if result.status is SearchStatus.FOUND:
        return EntryOutcome(
            entry,
            "found",
            total_degree=result.total_degree,
            product=result.product,
            cofactor=result.cofactor,
            frontier=result.frontier,
            unknown_degrees=result.unknown_degrees,
        )
    return EntryOutcome(
        entry,
        "unresolved",
        frontier=result.frontier,
        unknown_degrees=result.unknown_degrees,
    )


def run_scan(entries: Sequence[ListEntry], config: Optional[ScanConfig] = None) -> SweepReport:
    """Classify every entry and write the result files.

    Files written to ``config.out_dir``:

    * ``newman.txt``     entries already Newman (degree, measure, coefficients)
    * ``positive.txt``   entries with a positive real root (degree, measure,
      the root as a decimal, coefficients)
    * ``outputP.txt``    entries whose multiple was found (degree, measure,
      coefficients), aligned line by line with
    * ``outputQ.txt``    the cofactors (degree, coefficients) and
    * ``outputD.txt``    the Newman products (coefficients)
    * ``nonsol.txt``     entries the search did not resolve

    With ``jobs`` > 1 entries are classified in worker processes; outputs are
    written in input order, so the files are identical to a single-job run.
    """
    config = config or ScanConfig()
    start = time.perf_counter()
    jobs = config.effective_jobs()
    payloads = [(e, config.max_total_degree, config.solve_options) for e in entries]
    if jobs > 1 and len(entries) > 1:
        import multiprocessing

        with multiprocessing.Pool(processes=jobs) as pool:
            outcomes = list(pool.imap(_scan_entry, payloads))
    else:
        outcomes = [_scan_entry(pl) for pl in payloads]

    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    newman_lines: list[str] = []
    positive_lines: list[str] = []
    p_lines: list[str] = []
    q_lines: list[str] = []
    d_lines: list[str] = []
    nonsol_lines: list[str] = []
    for oc in outcomes:
        e = oc.entry
        coeff_txt = " ".join(str(c) for c in e.coeffs)
        head = f"{e.degree} {e.mahler:.9f}"
        if oc.classification == "newman":
            newman_lines.append(f"{head} {coeff_txt}")
        elif oc.classification == "positive":
            positive_lines.append(f"{head} {oc.positive_root:.9f} {coeff_txt}")
        elif oc.classification == "found":
            q = oc.cofactor
            prod = oc.product.to_polynomial()
            p_lines.append(f"{head} {coeff_txt}")
            q_lines.append(f"{q.degree} {q.to_line()}")
            d_lines.append(prod.to_line())
        else:
            nonsol_lines.append(f"{head} {coeff_txt}")

    def dump(name: str, lines: list[str]) -> None:
        (out_dir / name).write_text("\n".join(lines) + ("\n" if lines else ""))

    dump("newman.txt", newman_lines)
    dump("positive.txt", positive_lines)
    dump("outputP.txt", p_lines)
    dump("outputQ.txt", q_lines)
    dump("outputD.txt", d_lines)
    dump("nonsol.txt", nonsol_lines)

    return SweepReport(
        outcomes=tuple(outcomes),
        newman=len(newman_lines),
        positive=len(positive_lines),
        found=len(p_lines),
        unresolved=len(nonsol_lines),
        wall_time=time.perf_counter() - start,
    )
