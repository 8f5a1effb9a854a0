"""
A small census of cubic graphs
==============================

Enumerate connected cubic graphs and run the batch verifier over them.
Same thing from the shell: ``bdom gen --cubic --n 10 | bdom verify``.
"""

import time

from bdom import enumerate_connected, report, verify_stream

for n in (4, 6, 8, 10, 12):
    t0 = time.perf_counter()
    res = verify_stream(enumerate_connected(n, cubic_only=True))
    s = res.summary
    print(f"n = {n:2d}: {s.count:3d} graphs, violations {s.violations}, "
          f"min slack {s.min_slack}, {time.perf_counter() - t0:.1f} s")

# the last batch as a plain-text summary
print(report(res.records, "summary"))
