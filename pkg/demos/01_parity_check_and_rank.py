"""
Parity-check matrices and p-ranks
=================================

Build H_{n,t} for a binary and a ternary code, then look at the ranks of the
two classical triple systems and the weights in their dual codes.
"""

from stsrank import CodeSpec, build_parity_check, incidence_matrix, matrix_rank, verify_dual_structure
from stsrank.designs import affine_plane_3, fano_plane

# the binary code C_{3,1}: one zero column and two copies of each nonzero pair
H = build_parity_check(CodeSpec(2, 3, 1))
print(H.data)

# ternary C_{2,1}: an all-ones row on top of three copies of each digit
print(build_parity_check(CodeSpec(3, 2, 1)).data)

# the Fano plane has 2-rank 4, the affine plane of order 3 has 3-rank 6
F, A = fano_plane(), affine_plane_3()
print("rank_2(Fano) =", matrix_rank(incidence_matrix(F, 2)))
print("rank_3(AG(2,3)) =", matrix_rank(incidence_matrix(A, 3)))

# over GF(5) nothing collapses
print("rank_5(Fano) =", matrix_rank(incidence_matrix(F, 5)))

# every nonzero word of the dual code has the same weight
for D, p in ((F, 2), (A, 3)):
    r = verify_dual_structure(incidence_matrix(D, p))
    print(f"v={r.v} corank={r.m} weights={r.histogram} passed={r.passed}")
