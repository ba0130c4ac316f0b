import itertools

from hypothesis import given, strategies as st

from hdgroup.surj import face_through_degeneracies, fmt_pair, fmt_tuple, gen_P, gen_S, \
    normalize_degeneracies
from oracles import surjections

# [PAPER] listings of S(2), S(3), S(4) in order
S_REFERENCE = {
    2: "∅2 < (1) < (0) < (1,0)",
    3: "∅3 < (2) < (1) < (2,1) < (0) < (2,0) < (1,0) < (2,1,0)",
    4: "∅4 < (3) < (2) < (3,2) < (1) < (3,1) < (2,1) < (3,2,1) < (0) < (3,0) < (2,0) "
       "< (3,2,0) < (1,0) < (3,1,0) < (2,1,0) < (3,2,1,0)",
}
# [PAPER] the pairings needed at levels 3 and 4, written (alpha)(beta)
P_REFERENCE = {
    3: "(1,0)(2) (2,0)(1) (0)(2,1) (0)(2) (1)(2) (0)(1)",
    4: "(0)(3,2,1) (3,2,0)(1) (3,1,0)(2) (2,1,0)(3) (3,0)(2,1) (2,0)(3,1) (1,0)(3,2) "
       "(1)(3,2) (0)(3,2) (0)(3,1) (0)(2,1) (3,1)(2) (2,1)(3) (3,0)(2) (3,0)(1) (2,0)(3) "
       "(2,0)(1) (1,0)(3) (1,0)(2) (2)(3) (1)(3) (0)(3) (1)(2) (0)(2) (0)(1)",
}


def test_S_matches_reference_order():
    for n, text in S_REFERENCE.items():
        assert " < ".join(fmt_tuple(a, n) for a in gen_S(n)) == text


def test_P_matches_reference():
    for n, text in P_REFERENCE.items():
        want = text.split()
        got = [fmt_pair(p) for p in gen_P(n)]
        assert len(got) == len(want) and set(got) == set(want)


def test_against_enumerated_surjections():
    for n in range(7):
        assert list(gen_S(n)) == surjections.S(n)
        assert len(gen_S(n)) == 2 ** n
        if n:
            assert set(gen_P(n)) == surjections.P(n)


def surjection(word, top):
    """The map [top] -> [top - k] induced by s_{w1} ... s_{wk} (w1 outermost).

    Operators compose contravariantly, so sigma_{w1} is applied first.
    """
    f = list(range(top + 1))
    for i in word:
        f = [v if v <= i else v - 1 for v in f]
    return tuple(f)


def coface(i, f):
    # f after delta_i, where delta_i: [m - 1] -> [m] skips i
    return tuple(v for j, v in enumerate(f) if j != i)


def skip(k, f):
    # delta_k after f
    return tuple(v if v < k else v + 1 for v in f)


@given(st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 10), max_size=n))))
def test_normal_form_preserves_the_composite(args):
    n, raw = args
    word = [x % (n - j) for j, x in enumerate(raw)]
    alpha = normalize_degeneracies(word)
    assert list(alpha) == sorted(alpha, reverse=True) and len(set(alpha)) == len(alpha)
    assert surjection(word, n) == surjection(alpha, n)


def test_face_through_degeneracies_matches_maps():
    for n in range(1, 6):
        for alpha in gen_S(n):
            for i in range(n + 1):
                beta, k = face_through_degeneracies(i, alpha)
                lhs = coface(i, surjection(alpha, n))
                if k is None:
                    assert lhs == surjection(beta, n - 1)
                else:
                    assert lhs == skip(k, surjection(beta, n - 1))
