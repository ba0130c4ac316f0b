import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hdgroup.groups import (GroupAction, GroupError, Homomorphism, LazyGroup, Subgroup,
                            associativity_witness, commutator_subgroup_of, conjugation_action,
                            cyclic, dihedral, direct_product, group_from_table,
                            is_isomorphic_small, normal_closure, quaternion, quotient, semidirect,
                            subgroup_closure, symmetric, trivial_group, whole)

SMALL = [trivial_group(), cyclic(2), cyclic(6), symmetric(3), dihedral(4), quaternion(),
         symmetric(4)]


def brute_group_laws(G):
    n = G.order
    e = G.identity
    for a, b, c in itertools.product(range(n), repeat=3):
        if G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)):
            return False
    return all(G.mul(e, a) == a == G.mul(a, e) and G.mul(a, G.inv(a)) == e for a in range(n))


@pytest.mark.parametrize("G", SMALL[:6], ids=lambda G: G.name or str(G.order))
def test_constructors_satisfy_group_laws(G):
    assert brute_group_laws(G)


def test_named_orders_and_invariants():
    assert [G.order for G in SMALL] == [1, 2, 6, 6, 8, 8, 24]
    assert not symmetric(3).is_abelian() and cyclic(6).is_abelian()
    Q = quaternion()
    assert sum(1 for a in Q.elements() if Q.element_order(a) == 2) == 1


def test_commutator_convention():
    S3 = symmetric(3)
    for a, b in itertools.product(S3.elements(), repeat=2):
        assert S3.comm(a, b) == S3.prod(a, b, S3.inv(a), S3.inv(b))
        assert S3.conj(a, b) == S3.prod(a, b, S3.inv(a))


def test_table_validation_errors():
    with pytest.raises(GroupError) as e:
        group_from_table(None, 0, [[0, 1]])
    assert e.value.kind == "BadTableShape"
    with pytest.raises(GroupError) as e:
        group_from_table(None, 0, [[1, 0], [0, 1]])
    assert e.value.kind in ("NoIdentity", "NoInverse")
    # a Latin square with identity 0 that is not associative (order 5 loop)
    t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupError) as e:
        group_from_table(None, 0, t)
    assert e.value.kind == "NotAssociative"
    assert associativity_witness(np.array(t)) is not None


def test_homomorphism_and_action_witnesses():
    C2, C4 = cyclic(2), cyclic(4)
    Homomorphism(C4, C2, [0, 1, 0, 1])
    with pytest.raises(GroupError) as e:
        Homomorphism(C4, C2, [0, 1, 1, 0])
    assert e.value.kind == "NotHomomorphism"
    with pytest.raises(GroupError) as e:
        GroupAction(C2, C4, [[0, 1, 2, 3], [0, 2, 1, 3]])
    assert e.value.kind == "NotAnAction"


def test_semidirect_index_and_product_rule():
    S3 = symmetric(3)
    A3 = Subgroup(S3, [S3.mul(a, a) for a in S3.elements()])
    act = conjugation_action(S3, A3)
    H = semidirect(act)
    T, A = act.target, act.actor
    nt = T.order
    assert H.order == 18 and brute_group_laws(H)
    for i, j in itertools.product(range(H.order), repeat=2):
        x, a, y, b = i % nt, i // nt, j % nt, j // nt
        assert H.mul(i, j) == T.mul(x, act(a, y)) + nt * A.mul(a, b)


def test_semidirect_goes_lazy_above_cap():
    S4 = symmetric(4)
    G = direct_product(S4, S4)           # 576
    act = conjugation_action(direct_product(G, symmetric(3)))  # 3456 x 3456 > cap
    H = semidirect(GroupAction(act.actor, act.target, act.table, check=False))
    assert isinstance(H, LazyGroup) and not H.materialized
    rng = np.random.default_rng(0)
    for _ in range(50):
        a, b, c = (int(v) for v in rng.integers(0, H.order, 3))
        assert H.mul(H.mul(a, b), c) == H.mul(a, H.mul(b, c))
        assert H.mul(a, H.inv(a)) == H.identity


def test_subgroups_quotients_and_commutators():
    S4 = symmetric(4)
    D = commutator_subgroup_of(S4, whole(S4), whole(S4))
    assert D.order == 12
    Q, proj, _ = quotient(S4, D)
    assert Q.order == 2 and proj.witness() is None
    V = normal_closure(S4, [S4.comm(a, b) for a in D.members for b in D.members])
    assert V.order == 4
    with pytest.raises(GroupError) as e:
        quotient(S4, subgroup_closure(S4, [1]))
    assert e.value.kind == "NotNormal"


def test_isomorphism_search():
    assert is_isomorphic_small(symmetric(3), dihedral(3)) is not None
    assert is_isomorphic_small(cyclic(4), direct_product(cyclic(2), cyclic(2))) is None
    assert is_isomorphic_small(dihedral(4), quaternion()) is None
    f = is_isomorphic_small(direct_product(cyclic(2), cyclic(3)), cyclic(6))
    assert f is not None and f.witness() is None and len(set(f.image.tolist())) == 6


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL[1:6]), st.sampled_from(SMALL[1:6]), st.data())
def test_direct_product_is_componentwise(G, H, data):
    P = direct_product(G, H)
    a = data.draw(st.integers(0, P.order - 1))
    b = data.draw(st.integers(0, P.order - 1))
    c = data.draw(st.integers(0, P.order - 1))
    assert P.mul(P.mul(a, b), c) == P.mul(a, P.mul(b, c))
    assert P.mul(a, P.inv(a)) == P.identity
    assert P.comm(a, b) == P.prod(a, b, P.inv(a), P.inv(b))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL[1:7]), st.lists(st.integers(0, 23), min_size=1, max_size=3))
def test_closure_is_a_subgroup(G, seeds):
    S = subgroup_closure(G, [s % G.order for s in seeds])
    mem = set(S.members)
    assert G.order % S.order == 0
    assert all(G.mul(a, G.inv(b)) in mem for a in mem for b in mem)
