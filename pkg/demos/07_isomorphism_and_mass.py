"""
Isomorphism classes and the mass formula
========================================

Sort the 128 STS(15) inside binary C_{4,1} into isomorphism classes and
check that the class sizes add up through |Aut C| / |stabilizer|.
"""

from stsrank import CodeSpec, automorphism_group, iso_classes
from stsrank.composer import iter_compositions
from stsrank.designs import affine_plane_3, fano_plane

print("|Aut(Fano)| =", automorphism_group(fano_plane()).order)
print("|Aut(AG(2,3))| =", automorphism_group(affine_plane_3()).order)

spec = CodeSpec(2, 4, 1)
report = iso_classes(iter_compositions(spec), spec)
for c in report.classes:
    print(f"rank {c.rank}: {c.multiplicity} systems, |Aut S| = {c.aut_order}, stabilizer in Aut C = {c.stabilizer_order}")
print(f"mass sum {report.mass_sum} vs {report.total_distinct} systems: balanced={report.mass_balanced}")
