"""Walk through S(n), the Moore complex and the coordinate decomposition of a nerve."""

import numpy as np

from hdgroup.catalog import crossed_module_nerve
from hdgroup.groups import Subgroup, conjugation_action, symmetric
from hdgroup.simplicial import coordinates, recompose
from hdgroup.surj import fmt_pair, fmt_tuple, gen_P, gen_S

for n in (2, 3):
    print(f"S({n}):", " < ".join(fmt_tuple(a, n) for a in gen_S(n)))
print("P(3):", " ".join(fmt_pair(p) for p in gen_P(3)))
print("|P(4)| =", len(gen_P(4)))

S3 = symmetric(3)
A3 = Subgroup(S3, [S3.mul(a, a) for a in S3.elements()])
_, emb = A3.as_group()
T = crossed_module_nerve(emb, conjugation_action(S3, A3), 3, name="nerve A3 -> S3")
mc = T.moore()
print("\nnerve of A3 -> S3, level orders:", [G.order for G in T.levels])
print("Moore term orders:", [t.order for t in mc.terms])
for n in range(T.k + 1):
    parts = [mc.terms[n - len(a)].order for a in gen_S(n)]
    print(f"  |G_{n}| = {T.levels[n].order} = product {parts} = {int(np.prod(parts))}")

# every element splits into one Moore coordinate per tuple of S(n)
x = T.levels[2].order - 1
c = coordinates(T, 2, x)
print("\ncoordinates of element", x, "at level 2:", c)
print("recomposed:", recompose(T, 2, c))
