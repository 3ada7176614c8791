"""Batch scan of a candidate list.

List files carry one monic reciprocal even-degree polynomial per line as
"degree measure coefficients". The scan routes each entry to one of four
result files: already a Newman polynomial, excluded by a positive real
root, Newman multiple found (three aligned files with polynomial, cofactor
and product), or unresolved within the degree cutoff.
"""

import tempfile
from pathlib import Path

from newmanpoly import ScanConfig, parse_list, run_scan

text = """\
# degree  measure  coefficients (constant term first)
2 1.000000000 1 1 1
2 1.000000000 1 -1 1
4 1.000000000 1 -1 1 -1 1
10 1.176280818 1 -1 0 1 -1 1 -1 1 0 -1 1
"""

entries = parse_list(text)
print("parsed", len(entries), "entries")

out_dir = Path(tempfile.mkdtemp(prefix="newman-scan-"))
report = run_scan(entries, ScanConfig(max_total_degree=60, out_dir=out_dir))
print(f"newman {report.newman}, positive {report.positive}, "
      f"found {report.found}, unresolved {report.unresolved} "
      f"in {report.wall_time:.1f}s")

print()
for name in ("newman.txt", "positive.txt", "outputP.txt", "outputQ.txt",
             "outputD.txt", "nonsol.txt"):
    body = (out_dir / name).read_text()
    print(f"--- {name}")
    print(body if body else "(empty)\n", end="")
