"""
Building blocks: small STS, 1-factorizations, Latin squares
============================================================

Count the three kinds of components by backtracking and compare with the
tabulated constants for orders that are out of reach.
"""

import time

from stsrank.components import catalog_count, iter_all_sts, iter_latin_squares, iter_one_factorizations
from stsrank.errors import UnknownConstantError

for name, gen, order in [
    ("N1", iter_all_sts, 7),
    ("N1", iter_all_sts, 9),
    ("N2", iter_one_factorizations, 8),
    ("N3", iter_latin_squares, 4),
]:
    t0 = time.perf_counter()
    n = sum(1 for _ in gen(order))
    print(f"{name}({order}) = {n}  ({time.perf_counter() - t0:.2f}s)")

# larger orders come from the constants table, with provenance
for kind, order in [("N3", 8), ("N3", 9), ("N2", 16)]:
    try:
        c = catalog_count(kind, order)
        print(f"{kind}({order}) = {c.value}  [{c.provenance}]")
    except UnknownConstantError as e:
        print(f"{kind}({order}) unknown: {e}")
