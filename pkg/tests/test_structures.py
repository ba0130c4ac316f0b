import itertools

import numpy as np
import pytest

from hdgroup.functors import to_simplicial
from hdgroup.groups import GroupError, Subgroup, cyclic, symmetric, trivial_action
from hdgroup.structures import (NOT_M_EQUIVARIANT, CrossedModule, ThreeCrossedModule,
                                TwoCrossedModule, axioms_2crossed, axioms_3crossed,
                                check_2crossed, check_3crossed, check_crossed_module,
                                derived_l_action, equivariance_axioms, from_components, set_threads,
                                structure_axioms_3crossed, xmod_constructors)
from helpers import catalog, negatives
from oracles import free_simplicial as fs

WORDS = fs.pool(23, count=3)


# ---------------------------------------------------------------- free simplicial group

def test_resolved_axioms_hold_on_free_words():
    ctx = fs.FreeContext(invert=True)
    assert fs.failures(axioms_3crossed("resolved"), ctx, WORDS) == []
    assert fs.failures(structure_axioms_3crossed(), ctx, WORDS) == []
    assert fs.failures(equivariance_axioms(), ctx, WORDS) == []


def test_literal_forms_fail_exactly_at_the_two_corrections():
    ctx = fs.FreeContext(invert=True)
    assert fs.failures(axioms_3crossed("literal"), ctx, WORDS) == ["3CM8", "3CM16"]


def test_liftings_must_be_read_inverted():
    # without the inverse reading many identities fail
    bad = fs.failures(axioms_3crossed("resolved"), fs.FreeContext(invert=False), WORDS)
    assert len(bad) >= 5


def test_strict_m_equivariance_rows_fail_on_free_words():
    bad = fs.failures(equivariance_axioms(strict=True), fs.FreeContext(), WORDS)
    assert sorted(bad) == sorted(f"M-equivariance {n}" for n in NOT_M_EQUIVARIANT)


class _Bottom:
    """K -> L -> M of the free simplicial group as a 2-crossed module."""
    mul, inv, comm, conj, e = (fs.FreeContext.mul, fs.FreeContext.inv, fs.FreeContext.comm,
                               fs.FreeContext.conj, fs.FreeContext.e)

    def d2(self, x):
        return fs.d(3, x)

    def d1(self, x):
        return fs.d(2, x)

    def nM(self, n, x):
        return fs.conj(fs.s(1, n), x)

    def nL(self, n, x):
        return fs.conj(fs.sa((2, 1), n), x)

    def lift(self, a, b):
        return fs.F((1,), (2,), a, b, 3)

    def mL(self, m, l):
        return fs.mul(self.lift(self.d2(l), m), l)


def test_bottom_two_crossed_module_on_free_words():
    words = {"N": WORDS["M"], "M": WORDS["L"], "L": WORDS["K"]}
    # L-valued sides are compared after d3, as for K above
    bad = []
    for ax in axioms_2crossed():
        doms = ax.domains()
        for vals in itertools.islice(itertools.product(*[words[g] for _, g in doms]), 12):
            env = dict(zip([n for n, _ in doms], vals))
            a, b = ax.lhs(_Bottom(), **env), ax.rhs(_Bottom(), **env)
            if ax.target == "L":
                a, b = fs.d(3, a), fs.d(3, b)
            if a != b:
                bad.append(ax.tag)
                break
    assert bad == []


def test_construction_sign_on_free_words():
    # s0 m . l . s0 m^-1 = d3(F_(1,0)(2)(m, l))^-1 . (s1 s0 d1 m) l (s1 s0 d1 m)^-1
    for m in WORDS["M"]:
        for l in WORDS["L"]:
            lhs = fs.conj(fs.s(0, m), l)
            ref = fs.conj(fs.sa((1, 0), fs.d(1, m)), l)
            x = fs.d(3, fs.F((1, 0), (2,), m, l, 3))
            assert lhs == fs.mul(fs.inv(x), ref)


# ---------------------------------------------------------------- crossed modules

def test_normal_inclusion_and_module():
    S3 = symmetric(3)
    A3 = Subgroup(S3, [S3.mul(a, a) for a in S3.elements()])
    assert check_crossed_module(xmod_constructors("normal_inclusion", {"G": S3, "N": A3})).ok
    X = xmod_constructors("trivial_module", {"P": S3, "M": cyclic(3),
                                             "act": trivial_action(S3, cyclic(3)).table})
    assert check_crossed_module(X).ok
    with pytest.raises(GroupError) as e:
        xmod_constructors("normal_inclusion", {"G": S3, "N": Subgroup(S3, [0, 1])})
    assert e.value.kind == "NotNormal"
    with pytest.raises(GroupError) as e:
        xmod_constructors("trivial_module", {"P": cyclic(2), "M": S3,
                                             "act": trivial_action(cyclic(2), S3).table})
    assert e.value.kind == "NotAModule"


def test_crossed_module_peiffer_failure():
    # S3 -> 1 with the trivial action: CM2 would need m m2 m^-1 = m2
    S3 = symmetric(3)
    one = cyclic(1)
    X = CrossedModule(S3, one, np.zeros(6, dtype=np.int64), np.arange(6)[None], "S3 -> 1")
    rep = check_crossed_module(X)
    assert not rep.ok and rep.failed() == ["CM2"]


# ---------------------------------------------------------------- 3-crossed modules

@pytest.mark.parametrize("name", list(catalog()))
def test_catalog_passes(name):
    rep = check_3crossed(catalog()[name])
    assert rep.ok, rep.witnesses[:3]


def test_literal_orientation_fails_on_the_coskeleton_source():
    rep = check_3crossed(catalog()["s3_shifted"], orientation="literal")
    assert not rep.ok
    assert {"3CM12a", "3CM12b", "3CM13"} <= set(rep.failed())


def test_bad_orientation_name():
    with pytest.raises(ValueError):
        check_3crossed(catalog()["trivial"], orientation="sideways")


@pytest.mark.parametrize("name", list(negatives()))
def test_negatives_pass_axioms_but_are_not_realized(name):
    X = negatives()[name]
    assert check_3crossed(X).ok
    with pytest.raises(GroupError) as e:
        to_simplicial(X)
    assert e.value.kind == "ConstructionInconsistent"


def test_3cm1_is_the_bottom_two_crossed_module():
    X = catalog()["c2_tower"]
    Y = from_components(X.K, X.L, X.M, X.N, d3=X.d3, d1=X.d1, actions=X.actions,
                        lifts={**X.lifts, "lift_2_1": np.array([[0, 0], [0, 1]])})
    rep = check_3crossed(Y)
    assert any(k.startswith("3CM1 ") and not v for k, v in rep.checks.items())


def test_derived_l_action():
    X = catalog()["s3_shifted"]
    act = derived_l_action(X)
    assert np.array_equal(act.table, X.actions["L_K"])


def test_missing_table_is_a_shape_error():
    X = catalog()["c2_tower"]
    lifts = dict(X.lifts)
    del lifts["lift_0_21"]
    Y = ThreeCrossedModule(X.K, X.L, X.M, X.N, X.d3, X.d2, X.d1, X.actions, lifts, "broken")
    with pytest.raises(GroupError) as e:
        check_3crossed(Y)
    assert e.value.kind == "ShapeMismatch"


def test_threads_give_identical_reports():
    X = catalog()["q8_commutator"]
    a = check_3crossed(X).to_dict()
    set_threads(4)
    try:
        b = check_3crossed(X).to_dict()
    finally:
        set_threads(1)
    assert a == b


def test_two_crossed_module_of_q8():
    X = catalog()["q8_commutator"]
    rep = check_2crossed(_top(X))
    assert rep.ok


def _top(X):
    # L -> M -> N with the 2-dimensional lifting
    return TwoCrossedModule(X.L, X.M, X.N, X.d2, X.d1, X.actions["N_M"], X.actions["N_L"],
                            X.lifts["lift"], "top")
