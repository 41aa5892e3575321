"""
The weight-3 words of C_{n,t}
=============================

Scan all triples for zero syndrome, split the columns into groups, and check
that the result is a group divisible design with the expected multiplicities.
"""

from collections import Counter

from stsrank import CodeSpec, column_partition, geometry_of, verify_gdd, weight3_design
from stsrank.geometry import classify_block

spec = CodeSpec(2, 4, 2)
D = weight3_design(spec)
part = column_partition(spec)
geo = geometry_of(spec)
print(f"{spec}: {len(D.blocks)} blocks on {D.v} points")
print("zero columns:", part.zero_set)
print("groups:", part.groups)
print(f"quotient geometry {geo.kind}({geo.d},{geo.q}) with lines {geo.lines}")

# every block is interior, mixed (a zero column plus a pair in one group) or transversal
print(Counter(classify_block(part, geo, b).tag for b in D.blocks))

# pair multiplicities
r = verify_gdd(spec)
print(f"same group {r.lambda_same_group}, across groups {r.lambda_cross_group}, passed={r.passed}")

# same story for a ternary code
r = verify_gdd(CodeSpec(3, 3, 1))
print(f"ternary (3,1): same group {r.lambda_same_group}, across groups {r.lambda_cross_group}, passed={r.passed}")
