"""Cached fixtures shared by the test modules."""

from functools import lru_cache

import numpy as np

from hdgroup.catalog import (crossed_module_nerve, free_class2_interval, three_crossed_catalog,
                             three_crossed_negatives)
from hdgroup.functors import extend_to_level4, level4_order, to_simplicial, to_three_crossed
from hdgroup.groups import (Subgroup, conjugation_action, cyclic, quaternion, symmetric,
                            trivial_group, whole)
from hdgroup.simplicial import (TruncatedSimplicialGroup, constant_simplicial,
                                extend_by_coskeleton)

LEVEL4_LIMIT = 400000


def _nerve(G, sub, k):
    _, emb = sub.as_group()
    return crossed_module_nerve(emb, conjugation_action(G, sub), k, name=f"nerve {sub.order}->{G.name}")


def s3_degree2(cosk=True):
    """(1, 1, S3) as a 2-truncated simplicial group, optionally coskeletal at level 3."""
    S3, one = symmetric(3), trivial_group()
    z = lambda n: np.zeros(n, dtype=np.int64)
    T = TruncatedSimplicialGroup([one, one, S3], [[z(1), z(1)], [z(6), z(6), z(6)]],
                                 [[z(1)], [z(1), z(1)]], "S3 in degree 2")
    return extend_by_coskeleton(T) if cosk else T


@lru_cache(None)
def simplicial_fixtures():
    """Shipped simplicial groups; every level is built from groups of order <= 8."""
    S3, C4 = symmetric(3), cyclic(4)
    A3 = Subgroup(S3, [S3.mul(a, a) for a in S3.elements()])
    return {
        "constant S3": constant_simplicial(S3, k=4),
        "constant Q8": constant_simplicial(quaternion(), k=4),
        "nerve A3 -> S3": _nerve(S3, A3, 4),
        "nerve C2 -> C4": _nerve(C4, Subgroup(C4, [0, 2]), 4),
        "nerve S3 -> S3": _nerve(S3, whole(S3), 3),
        "free class 2 over C3": free_class2_interval(3, 2),
        "S3 coskeleton": s3_degree2(),
    }


@lru_cache(None)
def catalog():
    return three_crossed_catalog()


@lru_cache(None)
def negatives():
    return three_crossed_negatives()


@lru_cache(None)
def inverse(name):
    return to_simplicial(catalog()[name])


@lru_cache(None)
def level4(name):
    return extend_to_level4(inverse(name).simplicial, LEVEL4_LIMIT)


def level4_names():
    return [k for k, X in catalog().items() if level4_order(X) <= LEVEL4_LIMIT]


@lru_cache(None)
def four_truncated():
    """4-truncated simplicial groups for the forward functor."""
    fx = {k: T for k, T in simplicial_fixtures().items() if T.k >= 4}
    for name in ("c2_identity", "s3_inclusion", "c2_tower"):
        fx[f"level 4 of {name}"] = level4(name)
    return fx


@lru_cache(None)
def forward(name):
    return to_three_crossed(four_truncated()[name])
