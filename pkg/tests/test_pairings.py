import itertools

import pytest

from hdgroup.groups import GroupError
from hdgroup.pairings import (F2_CLOSED_FORMS, F3_CLOSED_FORMS, TABLE1_ROWS, boundary_image_check,
                              closed_form_check, evaluate, f_pairing, moore_project,
                              pairing_subgroup, parse_expression, table1_check)
from hdgroup.surj import gen_P
from helpers import catalog, inverse, level4, simplicial_fixtures
from oracles import free_simplicial as fs


def pipeline(T, pair, x, y, n):
    """p([s_alpha x, s_beta y]) with p = p_{n-1} ... p_0, written out by hand."""
    G = T.levels[n]

    def sa(alpha, v):
        lvl = n - len(alpha)
        for i in reversed(alpha):
            v = int(T.degens[lvl][i][v])
            lvl += 1
        return v
    z = G.comm(sa(pair[0], x), sa(pair[1], y))
    for j in range(n):
        z = G.mul(z, G.inv(int(T.degens[n - 1][j][T.faces[n][j][z]])))
    return z


@pytest.fixture(scope="module")
def words():
    P = fs.pool(5, q=4, count=2)
    return {1: P["M"], 2: P["L"], 3: P["K"]}


def test_table1_expressions_hold_on_free_words(words):
    assert len(TABLE1_ROWS) == 25
    assert {r[1] for r in TABLE1_ROWS} == set(gen_P(4))
    for row, pair, vx, vy, text in TABLE1_ROWS:
        e = parse_expression(text)
        for x, y in itertools.product(words[int(vx[-1])], words[int(vy[-1])]):
            assert fs.evaluate(e, {vx: x, vy: y}) == fs.d(4, fs.F(pair[0], pair[1], x, y, 4)), row


def test_closed_forms_hold_on_free_words(words):
    assert set(F3_CLOSED_FORMS) == set(gen_P(3))
    for forms, n in ((F3_CLOSED_FORMS, 3), (F2_CLOSED_FORMS, 2)):
        for pair, (vx, vy, text) in forms.items():
            e = parse_expression(text)
            for x, y in itertools.product(words[int(vx[-1])], words[int(vy[-1])]):
                assert fs.evaluate(e, {vx: x, vy: y}) == fs.F(pair[0], pair[1], x, y, n)


def test_free_pairings_land_in_the_moore_complex(words):
    for n in (2, 3, 4):
        for a, b in gen_P(n):
            x = words[n - len(a)][0] if n - len(a) in words else None
            y = words[n - len(b)][0] if n - len(b) in words else None
            if x is None or y is None:
                continue
            z = fs.F(a, b, x, y, n)
            assert all(fs.d(i, z) == () for i in range(n))


@pytest.mark.parametrize("name", ["nerve A3 -> S3", "S3 coskeleton", "free class 2 over C3"])
def test_f_pairing_matches_hand_pipeline(name):
    T = simplicial_fixtures()[name]
    mc = T.moore()
    for n in range(2, min(T.k, 3) + 1):
        for pair in gen_P(n):
            xs = mc.terms[n - len(pair[0])].members[:6]
            ys = mc.terms[n - len(pair[1])].members[:6]
            for x, y in itertools.product(xs, ys):
                v = f_pairing(T, pair, x, y, n)
                assert v == pipeline(T, pair, x, y, n)
                assert v in mc.terms[n]


def test_moore_projection_is_idempotent_onto_moore():
    T = simplicial_fixtures()["S3 coskeleton"]
    mc = T.moore()
    for z in range(0, T.levels[3].order, 7):
        p = moore_project(T, 3, z)
        assert p in mc.terms[3] and moore_project(T, 3, p) == p


def test_f_pairing_rejects_non_moore_arguments():
    T = simplicial_fixtures()["nerve A3 -> S3"]
    bad = next(x for x in T.levels[1].elements() if x not in T.moore().terms[1])
    with pytest.raises(GroupError) as e:
        f_pairing(T, ((0,), (1,)), bad, 0, 2)
    assert e.value.kind == "ElementNotInMoore"


@pytest.mark.parametrize("name", ["nerve A3 -> S3", "S3 coskeleton", "free class 2 over C3"])
def test_closed_forms_on_fixtures(name):
    T = simplicial_fixtures()[name]
    assert closed_form_check(T, 2).ok
    if T.k >= 3:
        assert closed_form_check(T, 3).ok


@pytest.mark.parametrize("name", ["c2_identity", "s3_inclusion", "c2_tower"])
def test_table1_on_level4_extensions(name):
    rep = table1_check(level4(name))
    assert rep.ok, rep.witnesses
    assert len(rep.checks) == 50


def test_table1_needs_level4_for_the_comparison():
    with pytest.raises(GroupError) as e:
        table1_check(inverse("c2_tower").simplicial)
    assert e.value.kind == "InsufficientTruncation"
    assert table1_check(inverse("c2_tower").simplicial, compare_pipeline=False).ok


def test_expression_parser_errors():
    for text in ("s0 x1", "[s0 x1]", "[s0 x1, s1]"):
        with pytest.raises(GroupError):
            parse_expression(text)
    T = simplicial_fixtures()["S3 coskeleton"]
    with pytest.raises(GroupError):
        evaluate(T, "[x1, x2]", {"x1": 0, "x2": 0})


@pytest.mark.parametrize("name,n", [("nerve A3 -> S3", 2), ("nerve A3 -> S3", 3),
                                    ("S3 coskeleton", 2), ("free class 2 over C3", 2)])
def test_boundary_image_equals_commutator_product(name, n):
    rep = boundary_image_check(simplicial_fixtures()[name], n)
    assert rep.ok, (rep.witnesses, rep.notes)


def test_pairing_subgroup_is_trivial_without_moore_terms():
    T = simplicial_fixtures()["constant S3"]
    assert pairing_subgroup(T, 3).order == 1
    T = simplicial_fixtures()["S3 coskeleton"]
    assert pairing_subgroup(T, 3).order > 1
