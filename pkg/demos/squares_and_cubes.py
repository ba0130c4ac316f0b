"""Crossed squares, their mapping cones, and the crossed 3-cube of a simplicial group."""

from hdgroup.catalog import three_crossed_catalog
from hdgroup.cubes import (check_crossed_3cube, check_crossed_square, conjugation_square,
                           example1_squares, mapping_cone, porter_3cube)
from hdgroup.functors import to_simplicial
from hdgroup.groups import symmetric
from hdgroup.structures import check_2crossed

S = conjugation_square(symmetric(3))
print("commutator square of S3:", check_crossed_square(S).ok)
print("its mapping cone is a 2-crossed module:", check_2crossed(mapping_cone(S)).ok)

# with M trivial a 3-crossed module gives three squares
for name in ("c2_identity", "s3_shifted"):
    sq = example1_squares(three_crossed_catalog()[name])
    print(f"{name}: squares pass", [check_crossed_square(q).ok for q in sq])
print("the middle square needs L abelian, so it fails for s3_shifted")

X = three_crossed_catalog()["c2_tower"]
C = porter_3cube(to_simplicial(X).simplicial)
print("\ncube corner orders:", {c: G.order for c, G in C.groups.items()})
print("crossed 3-cube conditions:", check_crossed_3cube(C).ok)
