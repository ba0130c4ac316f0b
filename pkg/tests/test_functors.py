import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hdgroup.functors import (compare_3crossed, coordinate_transport, homotopy_report,
                              level4_order, pi_prime, roundtrip_check, to_simplicial,
                              to_three_crossed)
from hdgroup.groups import GroupError, Homomorphism, is_isomorphic_small
from hdgroup.simplicial import check_simplicial, homotopy_groups
from hdgroup.structures import check_3crossed, from_components
from hdgroup.surj import gen_S
from helpers import catalog, forward, four_truncated, inverse, s3_degree2, simplicial_fixtures

CATALOG = list(catalog())
FOUR = list(four_truncated())


@pytest.mark.parametrize("name", FOUR)
def test_forward_output_passes(name):
    rep = check_3crossed(forward(name).three_crossed)
    assert rep.ok, rep.witnesses[:3]


def test_forward_needs_level4_or_certificate():
    T = s3_degree2()
    with pytest.raises(GroupError) as e:
        to_three_crossed(T)
    assert e.value.kind == "InsufficientTruncation"
    assert to_three_crossed(T, certified_length=3).notes
    with pytest.raises(GroupError) as e:
        to_three_crossed(s3_degree2(cosk=False), certified_length=3)
    assert e.value.kind == "InsufficientTruncation"


def test_forward_of_a_nerve_is_the_crossed_module():
    X = forward("nerve A3 -> S3").three_crossed
    assert [X.K.order, X.L.order, X.M.order, X.N.order] == [1, 1, 3, 6]
    assert len(set(X.d1.tolist())) == 3


@pytest.mark.parametrize("name", CATALOG)
def test_inverse_construction(name):
    X = catalog()[name]
    res = inverse(name)
    T = res.simplicial
    assert T.k == 3 and check_simplicial(T).ok
    for n in range(1, 4):
        for i in range(n + 1):
            assert T.face_hom(n, i).witness() is None
        for i in range(n):
            assert T.degen_hom(n - 1, i).witness() is None
    # Moore terms by brute force, then identified with K, L, M, N element-wise
    chain = {0: X.N, 1: X.M, 2: X.L, 3: X.K}
    names = {0: "N", 1: "M", 2: "L", 3: "K"}
    bd = {1: X.d1, 2: X.d2, 3: X.d3}
    for n in range(4):
        e = T.levels[n - 1].identity if n else None
        moore = [x for x in T.levels[n].elements() if all(T.faces[n][i][x] == e for i in range(n))]
        emb = res.embeddings[names[n]]
        assert sorted(emb.tolist()) == moore
        G, H = chain[n], T.levels[n]
        assert Homomorphism(G, H, emb).witness() is None
        if n:
            below = res.embeddings[names[n - 1]]
            assert np.array_equal(T.faces[n][n][emb], below[bd[n]])
    # order of each level from the S(n) count
    for n in range(4):
        assert T.levels[n].order == int(np.prod([chain[n - len(a)].order for a in gen_S(n)]))


def test_h3_order_uses_all_of_S3():
    X = catalog()["c2_tower"]
    assert inverse("c2_tower").simplicial.levels[3].order == \
        X.K.order * X.L.order ** 3 * X.M.order ** 3 * X.N.order


def test_six_coordinate_maps_break_the_simplicial_identities():
    # (k, l, l', m, m', n) with d0 = (l', m, m', n) and s0 (l, m, m', n) = (1, l, 1, m, m', n)
    d0 = lambda k, l, l2, m, m2, n: (l2, m, m2, n)
    s0 = lambda l, m, m2, n: (0, l, 0, m, m2, n)
    s2 = s0
    x = (1, 0, 0, 0)      # l nontrivial
    assert d0(*s0(*x)) != x
    assert s0 is s2


@pytest.mark.parametrize("name", CATALOG)
def test_roundtrip(name):
    rep = roundtrip_check(catalog()[name])
    assert rep.ok, rep.failed()


def test_roundtrip_certified_length_path():
    X = catalog()["c2_tower"]
    rep = roundtrip_check(X, level4=False)
    assert rep.ok and rep.notes


def test_compare_detects_a_changed_table():
    X = catalog()["c2_tower"]
    Y = from_components(X.K, X.L, X.M, X.N, d3=X.d3, d1=X.d1, actions=X.actions,
                        lifts={**X.lifts, "lift": np.zeros((2, 2), dtype=np.int64)})
    rep = compare_3crossed(X, Y)
    assert rep.failed() == ["lift"]


@pytest.mark.parametrize("name", CATALOG)
def test_homotopy_agrees(name):
    T = inverse(name).simplicial
    assert homotopy_report(T, catalog()[name]).ok


@pytest.mark.parametrize("name", FOUR)
def test_homotopy_agrees_on_forward_outputs(name):
    T = four_truncated()[name]
    X = forward(name).three_crossed
    simp = homotopy_groups(T, certified_length=4)
    prime = pi_prime(X)
    for i in range(4):
        assert is_isomorphic_small(simp[i].group, prime[i]) is not None


def test_pi_prime_of_shifted_and_tower():
    assert [G.order for G in pi_prime(catalog()["s3_shifted"])] == [1, 1, 1, 1]
    assert [G.order for G in pi_prime(catalog()["c2_identity"])] == [1, 1, 1, 1]
    assert [G.order for G in pi_prime(catalog()["s3_inclusion"])] == [2, 1, 1, 1]
    assert [G.order for G in pi_prime(catalog()["q8_commutator"])] == [1, 4, 1, 1]


@pytest.mark.parametrize("name", ["nerve A3 -> S3", "constant S3", "S3 coskeleton"])
def test_coordinate_transport(name):
    T = simplicial_fixtures()[name]
    T = T.truncate(3) if T.k > 3 else T
    rep = coordinate_transport(T)
    assert rep.ok, rep.failed()


def test_inverse_rejects_failing_input():
    # with lift_1_0 trivial 3CM13 would force K = S3 to be abelian
    X = catalog()["s3_shifted"]
    Y = from_components(X.K, X.L, X.M, X.N, d3=X.d3, d2=X.d2, d1=X.d1, actions=X.actions,
                        lifts={**X.lifts, "lift_1_0": np.zeros((6, 6), dtype=np.int64)})
    with pytest.raises(GroupError) as e:
        to_simplicial(Y)
    assert e.value.kind == "AxiomFailure"


def test_level4_order_counts():
    X = catalog()["c2_tower"]
    assert level4_order(X) == 2 ** 15


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_bilinear_c3_family_round_trips_when_realized(data):
    # liftings x, y -> a x y in C3 with d2 = id: realized ones must round-trip
    from hdgroup.groups import cyclic, trivial_group
    C3 = cyclic(3)
    r = np.arange(3)
    lifts = {nm: (data.draw(st.integers(0, 2), label=nm) * np.outer(r, r)) % 3
             for nm in ("lift_1_0", "lift_2_1", "lift_0_2", "lift_10_2", "lift_20_1")}
    X = from_components(C3, C3, C3, trivial_group(), d2=np.arange(3), lifts=lifts)
    if not check_3crossed(X).ok:
        return
    try:
        to_simplicial(X)
    except GroupError as e:
        assert e.kind == "ConstructionInconsistent"
        return
    assert roundtrip_check(X).ok
