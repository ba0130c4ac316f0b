"""From a 3-crossed module to a simplicial group and back."""

from hdgroup.catalog import three_crossed_catalog
from hdgroup.functors import pi_prime, roundtrip_check, to_simplicial
from hdgroup.simplicial import homotopy_groups
from hdgroup.structures import check_3crossed

X = three_crossed_catalog()["c2_tower"]
print("K, L, M, N orders:", [G.order for G in (X.K, X.L, X.M, X.N)])
rep = check_3crossed(X)
print("axioms:", "all hold" if rep.ok else rep.failed())

res = to_simplicial(X)
T = res.simplicial
print("simplicial levels:", [G.order for G in T.levels])
print("Moore terms embed as", {k: len(v) for k, v in res.embeddings.items()})

pis = homotopy_groups(T, certified_length=3)
print("homotopy orders from the simplicial group:", [h.group.order for h in pis])
print("homotopy orders from K -> L -> M -> N:   ", [G.order for G in pi_prime(X)])

# the forward functor recovers the same tables after relabeling
rt = roundtrip_check(X)
print("round trip:", "tables identical" if rt.ok else rt.failed())
