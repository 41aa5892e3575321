"""
Composing an STS from a recipe and taking it apart again
=========================================================

A recipe picks an STS on the zero columns, a 1-factorization for every
group matched to the zero columns, and a Latin square on every line.
"""

import random

from stsrank import CodeSpec, RecipeSpace, compose, decompose_sts, sts_rank, validate_sts

spec = CodeSpec(2, 5, 2)
space = RecipeSpace(spec)
print(f"{spec}: {space.size} recipes, radices {space.radices}")

rng = random.Random(1)
r = space.random(rng)
S = compose(r, spec)
print("valid STS:", validate_sts(S).is_sts, " blocks:", len(S.blocks), " 2-rank:", sts_rank(S, 2))

# the decomposition recovers the exact recipe
print("round trip ok:", decompose_sts(S, spec) == r)

# recipes are just odometer positions
print("recipe #12345 gives a different system:", compose(space[12345], spec) != S)
