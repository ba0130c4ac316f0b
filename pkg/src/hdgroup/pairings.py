"""Peiffer pairings F_{alpha,beta} and the identities they satisfy.

Commutator expressions are written in a small text form, for example
"[s0 d3 x3, s2 s1 x1][s2 s1 x1, x3]".  A variable's trailing digit is
the level of the Moore term it lives in; operators apply right to left.
"""

from __future__ import annotations

import re
from typing import Dict, List, Sequence, Tuple

from .groups import (GroupError, Subgroup, commutator_subgroup_of, intersection, normal_closure,
                     subgroup_closure, subgroup_product, whole)
from .simplicial import Report, TruncatedSimplicialGroup, degenerate_subgroup
from .surj import gen_P, gen_S, fmt_pair, normalize_degeneracies  # noqa: F401  (re-exported)


# ---------------------------------------------------------------- F pairings

def pairing_level(pair) -> int:
    """Smallest n with both tuples inside [n-1]."""
    a, b = pair
    return max(a + b) + 1


def moore_project(T: TruncatedSimplicialGroup, n: int, z: int) -> int:
    """p_{n-1} ... p_0 (z) with p_j(z) = z s_j d_j(z)^-1."""
    G = T.levels[n]
    for j in range(n):
        w = int(T.degens[n - 1][j][T.faces[n][j][z]])
        z = G.mul(z, G.inv(w))
    return z


def _in_moore(T, lvl, x) -> bool:
    return lvl == 0 or all(T.faces[lvl][i][x] == T.levels[lvl - 1].identity for i in range(lvl))


def f_pairing(T: TruncatedSimplicialGroup, pair, x: int, y: int, n: int = None) -> int:
    """F_{alpha,beta}(x, y) = p([s_alpha x, s_beta y]) in NG_n."""
    alpha, beta = tuple(pair[0]), tuple(pair[1])
    n = pairing_level(pair) if n is None else n
    for v, t in ((x, alpha), (y, beta)):
        if not _in_moore(T, n - len(t), int(v)):
            raise GroupError("ElementNotInMoore", f"{v} is not in NG_{n - len(t)}", v)
    G = T.levels[n]
    z = G.comm(T.s_alpha(n, alpha, int(x)), T.s_alpha(n, beta, int(y)))
    return moore_project(T, n, z)


def pairing_subgroup(T: TruncatedSimplicialGroup, n: int) -> Subgroup:
    """Normal subgroup N_n of G_n generated by all F_{alpha,beta} values."""
    mc = T.moore()
    gens = set()
    for pair in gen_P(n):
        xs = mc.terms[n - len(pair[0])].members
        ys = mc.terms[n - len(pair[1])].members
        for x in xs:
            for y in ys:
                gens.add(f_pairing(T, pair, x, y, n))
    return normal_closure(T.levels[n], sorted(gens))


# ---------------------------------------------------------------- expression evaluator

_BRACKET = re.compile(r"\[([^\[\]]*)\]")
_TOKEN = re.compile(r"([sd])(\d)|([a-z])(\d)(\^-1)?")


def _parse_side(text: str):
    words, ops = [], []
    for m in _TOKEN.finditer(text):
        if m.group(1):
            ops.append((m.group(1), int(m.group(2))))
        else:
            words.append((tuple(ops), m.group(3) + m.group(4), bool(m.group(5))))
            ops = []
    if ops or not words:
        raise GroupError("BadExpression", f"cannot parse {text!r}")
    return words


def parse_expression(text: str):
    """List of commutators, each a pair of word lists."""
    out = []
    for body in _BRACKET.findall(text):
        if body.count(",") != 1:
            raise GroupError("BadExpression", f"bad commutator [{body}]")
        left, right = body.split(",")
        out.append((_parse_side(left), _parse_side(right)))
    if not out:
        raise GroupError("BadExpression", f"no commutators in {text!r}")
    return out


def _eval_word(T, word, env):
    ops, var, inverse = word
    lvl = int(var[-1])
    x = int(env[var])
    for kind, i in reversed(ops):
        if kind == "d":
            x = int(T.faces[lvl][i][x])
            lvl -= 1
        else:
            x = int(T.degens[lvl][i][x])
            lvl += 1
    if inverse:
        x = T.levels[lvl].inv(x)
    return lvl, x


def _eval_side(T, side, env):
    lvl, acc = None, None
    for w in side:
        l2, v = _eval_word(T, w, env)
        if lvl is None:
            lvl, acc = l2, v
        elif l2 != lvl:
            raise GroupError("BadExpression", "mixed levels inside one factor")
        else:
            acc = T.levels[lvl].mul(acc, v)
    return lvl, acc


def evaluate(T: TruncatedSimplicialGroup, expr, env: Dict[str, int]) -> Tuple[int, int]:
    """Evaluate a parsed (or text) expression; returns (level, element)."""
    if isinstance(expr, str):
        expr = parse_expression(expr)
    lvl, acc = None, None
    for left, right in expr:
        la, a = _eval_side(T, left, env)
        lb, b = _eval_side(T, right, env)
        if la != lb or (lvl is not None and la != lvl):
            raise GroupError("BadExpression", "commutator factors at different levels")
        G = T.levels[la]
        c = G.comm(a, b)
        lvl, acc = la, c if acc is None else G.mul(acc, c)
    return lvl, acc


# ---------------------------------------------------------------- closed forms for n = 3

# F_{alpha,beta} at n = 3 written out as commutators of degeneracies
F3_CLOSED_FORMS = {
    ((1, 0), (2,)): ("x1", "y2", "[s1 s0 x1, s2 y2][s2 y2, s2 s0 x1]"),
    ((2, 0), (1,)): ("x1", "y2", "[s2 s0 x1, s1 y2][s1 y2, s2 s1 x1][s2 s1 x1, s2 y2][s2 y2, s2 s0 x1]"),
    ((0,), (2, 1)): ("x2", "y1", "[s0 x2, s2 s1 y1][s2 s1 y1, s1 x2][s2 x2, s2 s1 y1]"),
    ((0,), (1,)): ("x2", "y2", "[s0 x2, s1 y2][s1 y2, s1 x2][s2 x2, s2 y2]"),
    ((0,), (2,)): ("x2", "y2", "[s0 x2, s2 y2]"),
    ((1,), (2,)): ("x2", "y2", "[s1 x2, s2 y2][s2 y2, s2 x2]"),
}

# n = 2: the single pairing behind the 2-dimensional Peiffer lifting
F2_CLOSED_FORMS = {
    ((0,), (1,)): ("x1", "y1", "[s0 x1, s1 y1][s1 y1, s1 x1]"),
}


def closed_form_check(T: TruncatedSimplicialGroup, n: int = 3) -> Report:
    """Closed forms against the p-projection pipeline on every argument pair."""
    forms = F3_CLOSED_FORMS if n == 3 else F2_CLOSED_FORMS
    rep = Report(f"closed forms n={n}")
    mc = T.moore()
    for pair, (vx, vy, text) in forms.items():
        expr = parse_expression(text)
        ok = True
        for x in mc.terms[int(vx[-1])].members:
            for y in mc.terms[int(vy[-1])].members:
                _, a = evaluate(T, expr, {vx: x, vy: y})
                b = f_pairing(T, pair, x, y, n)
                if a != b:
                    rep.record(f"F{fmt_pair(pair)}", False, ((x, y), a, b))
                    ok = False
                    break
            if not ok:
                break
        if ok:
            rep.record(f"F{fmt_pair(pair)}", True)
    return rep


# ---------------------------------------------------------------- images under d_4 at n = 4

# (row, pair, variable for alpha, variable for beta, expression for d_4 F)
TABLE1_ROWS = [
    (1, ((0,), (3, 2, 1)), "x3", "x1",
     "[s0 d3 x3, s2 s1 x1][s2 s1 x1, s1 d3 x3][s2 d3 x3, s2 s1 x1][s2 s1 x1, x3]"),
    (2, ((3, 2, 0), (1,)), "x1", "x3",
     "[s2 s0 x1, s1 d3 x3][s1 d3 x3, s2 s1 x1][s2 s1 x1, s2 d3 x3][s2 d3 x3, s2 s0 x1]"
     "[s2 s0 x1, x3][x3, s2 s1 x1]"),
    (3, ((3, 1, 0), (2,)), "x1", "x3",
     "[s1 s0 x1, s2 d3 x3][s2 d3 x3, s2 s0 x1][s2 s0 x1, x3][x3, s1 s0 x1]"),
    (4, ((2, 1, 0), (3,)), "x1", "x3", "[s2 s1 s0 d1 x1, x3][x3, s1 s0 x1]"),
    (5, ((3, 0), (2, 1)), "x2", "y2",
     "[s0 x2, s2 s1 d2 y2][s2 s1 d2 y2, s1 x2][s2 x2, s2 s1 d2 y2][s1 y2, s2 x2]"
     "[s1 x2, s1 y2][s1 y2, s0 x2]"),
    (6, ((2, 0), (3, 1)), "x2", "y2",
     "[s2 s0 d2 x2, s1 y2][s1 y2, s2 s1 d2 x2][s2 s1 d2 x2, s2 y2][s2 y2, s2 s0 d2 x2]"
     "[s0 x2, s2 y2][s2 y2, s1 x2][s1 x2, s1 y2][s1 y2, s0 x2]"),
    (7, ((1, 0), (3, 2)), "x2", "y2",
     "[s1 s0 d2 x2, s2 y2][s2 y2, s2 s0 d2 x2][s0 x2, s2 y2]"),
    (8, ((1,), (3, 2)), "x3", "x2", "[s1 d3 x3, s2 x2][s2 x2, s2 d3 x3][x3, s2 x2]"),
    (9, ((0,), (3, 2)), "x3", "x2", "[s0 d3 x3, s2 x2]"),
    # the argument types fix this row as (0)(3,1)
    (10, ((0,), (3, 1)), "x3", "x2",
     "[s0 d3 x3, s1 x2][s1 x2, s1 d3 x3][s2 d3 x3, s2 x2][s2 x2, x3]"),
    (11, ((0,), (2, 1)), "x3", "x2",
     "[s0 d3 x3, s2 s1 d2 x2][s2 s1 d2 x2, s1 d3 x3][s2 d3 x3, s2 s1 d2 x2][s1 x2, x3]"),
    # the third factor acts on x2, the only level-2 variable
    (12, ((3, 1), (2,)), "x2", "x3",
     "[s1 x2, s2 d3 x3][s2 d3 x3, s2 x2][s2 x2, x3][x3, s1 x2]"),
    (13, ((2, 1), (3,)), "x2", "x3", "[s2 s1 d2 x2, x3][x3, s1 x2]"),
    (14, ((3, 0), (2,)), "x2", "x3", "[s0 x2, s2 d3 x3][x3, s0 x2]"),
    (15, ((3, 0), (1,)), "x2", "x3",
     "[s0 x2, s1 d3 x3][s1 d3 x3, s1 x2][s2 x2, s2 d3 x3][x3, s2 x2]"),
    (16, ((2, 0), (3,)), "x2", "x3", "[s2 s0 d2 x2, x3][x3, s0 x2]"),
    (17, ((2, 0), (1,)), "x2", "x3",
     "[s2 s0 d2 x2, s1 d3 x3][s1 d3 x3, s2 s1 d2 x2][s2 s1 d2 x2, s2 d3 x3]"
     "[s2 d3 x3, s2 s0 d2 x2][s0 x2, x3][x3, s1 x2]"),
    (18, ((1, 0), (3,)), "x2", "x3", "[s1 s0 d2 x2, x3]"),
    (19, ((1, 0), (2,)), "x2", "x3",
     "[s1 s0 d2 x2, s2 d3 x3][s2 d3 x3, s2 s0 d2 x2][s0 x2, x3]"),
    (20, ((2,), (3,)), "x3", "y3", "[s2 d3 x3, y3][y3, x3]"),
    (21, ((1,), (3,)), "x3", "y3", "[s1 d3 x3, y3]"),
    (22, ((0,), (3,)), "x3", "y3", "[s0 d3 x3, y3]"),
    (23, ((1,), (2,)), "x3", "y3", "[s1 d3 x3, s2 d3 y3][s2 d3 y3, s2 d3 x3][x3, y3]"),
    (24, ((0,), (2,)), "x3", "y3", "[s0 d3 x3, s2 d3 y3]"),
    (25, ((0,), (1,)), "x3", "y3",
     "[s0 d3 x3, s1 d3 y3][s1 d3 y3, s1 d3 x3][s2 d3 x3, s2 d3 y3][y3, x3]"),
]

TABLE1_NOTES = [
    "row 10: evaluated as F(0)(3,1), the pairing its argument types fit",
    "row 12: third factor read as [s2 x2, x3]",
]


def table1_check(T: TruncatedSimplicialGroup, compare_pipeline: bool = True) -> Report:
    """Each row: the expression is trivial, and equals d_4 F through the pipeline.

    The expressions only involve levels <= 3; the comparison with d_4 F
    needs level 4, so a 3-truncated input requires compare_pipeline=False.
    """
    if T.k < 3 or (compare_pipeline and T.k < 4):
        raise GroupError("InsufficientTruncation", "needs level 4")
    rep = Report(f"d4 images {T.name}")
    rep.notes.extend(TABLE1_NOTES)
    mc = T.moore()
    e3 = T.levels[3].identity
    for row, pair, vx, vy, text in TABLE1_ROWS:
        expr = parse_expression(text)
        trivial, agrees = True, True
        wt = wa = None
        for x in mc.terms[int(vx[-1])].members:
            for y in mc.terms[int(vy[-1])].members:
                _, v = evaluate(T, expr, {vx: x, vy: y})
                if v != e3 and trivial:
                    trivial, wt = False, ((x, y), v)
                if compare_pipeline:
                    w = int(T.faces[4][4][f_pairing(T, pair, x, y, 4)])
                    if w != v and agrees:
                        agrees, wa = False, ((x, y), v, w)
        rep.record(f"row {row} trivial", trivial, wt)
        if compare_pipeline:
            rep.record(f"row {row} equals d4 F{fmt_pair(pair)}", agrees, wa)
    return rep


# ---------------------------------------------------------------- boundary image

def boundary_image_check(T: TruncatedSimplicialGroup, n: int) -> Report:
    """Compare d_n(NG_n) with the product of [K_I, K_J] over P(n).

    K_I is the intersection of ker d_i on G_{n-1} for i in I, with
    I = {0..n-1} minus the indices of alpha (likewise J for beta).
    """
    if not 2 <= n <= min(4, T.k):
        raise GroupError("InsufficientTruncation", f"level {n} unavailable")
    rep = Report(f"boundary image n={n}")
    G = T.levels[n - 1]
    D = degenerate_subgroup(T, n)
    if D.order != T.levels[n].order:
        rep.notes.append(f"HypothesisFailed: D_{n} has order {D.order} < {T.levels[n].order}")
    mc = T.moore()
    lhs = Subgroup(G, [int(T.faces[n][n][x]) for x in mc.terms[n].members])
    kers = [Subgroup(G, [x for x in G.elements() if T.faces[n - 1][i][x] == T.levels[n - 2].identity])
            for i in range(n)]

    def K(idx):
        S = whole(G)
        for i in idx:
            S = intersection(S, kers[i])
        return S

    parts = []
    for a, b in gen_P(n):
        I = [i for i in range(n) if i not in a]
        J = [j for j in range(n) if j not in b]
        parts.append(commutator_subgroup_of(G, K(I), K(J)))
    rhs = subgroup_product(G, parts) if parts else Subgroup(G, [G.identity])
    rep.record(f"d{n}(NG{n}) equals product of [K_I, K_J]", lhs == rhs, (lhs.order, rhs.order))
    rep.notes.append(f"orders: image {lhs.order}, commutator product {rhs.order}")
    return rep
