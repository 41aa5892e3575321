"""
Exact counts and isomorphism-class bounds
=========================================

Everything here is an exact integer or fraction.
"""

from stsrank import CodeSpec, formula_classical, formula_distinct, formula_exact_rank_t1, iso_bounds, iso_bounds_exact_rank
from stsrank.counting import aut_code_order

spec = CodeSpec(3, 3, 1)
print("STS(27) in ternary C_{3,1}:", formula_distinct(spec))
print("classical copies:", formula_classical(3, 3))
print("with 3-rank exactly 24:", formula_exact_rank_t1(3, 3))
b = iso_bounds(spec)
print(f"classes with 3-rank <= 24: {b.lower_int} .. {b.upper_int}")
print("classes with 3-rank exactly 24, at least:", iso_bounds_exact_rank(spec), "/ refined", iso_bounds_exact_rank(spec, refined=True))

# binary STS(31)
for t in (1, 2, 3):
    spec = CodeSpec(2, 5, t)
    b = iso_bounds(spec)
    print(f"(5,{t}): |Aut C| = {aut_code_order(spec)}, lower {b.lower_int}, exact-rank lower {iso_bounds_exact_rank(spec)}")

# the tighter bound on |Aut S| shrinks the upper estimate
print("(5,2) upper:", iso_bounds(CodeSpec(2, 5, 2)).upper_int, "sharp:", iso_bounds(CodeSpec(2, 5, 2), sharp=True).upper_int)
