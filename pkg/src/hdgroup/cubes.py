"""Crossed squares, their mapping cones, and crossed 3-cubes.

A crossed square is stored as

    L --f--> M
    |u       |v
    N --g--> P

with P acting on L, M, N and h: M x N -> L.  A crossed 3-cube has eight
corners indexed by the subsets of {0, 1, 2}:

    K = {0,1,2}
    L = {0,2}   M = {1,2}   N = {0,1}
    P = {0}     Q = {1}     R = {2}
    S = {}

Edges drop one index, so L -> P, R;  M -> Q, R;  N -> P, Q.  This is the
only corner assignment under which all nine constituent squares below
have the right shape.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from .groups import (FiniteGroup, GroupAction, GroupError, Homomorphism, Subgroup,
                     conjugation_action, semidirect)
from .simplicial import Report, TruncatedSimplicialGroup, check_simplicial
from .structures import (Axiom, CrossedModule, ThreeCrossedModule, TwoCrossedModule,
                         _Ops, _shape, check_2crossed, check_crossed_module, run_axioms)


# ---------------------------------------------------------------- crossed squares

@dataclass
class CrossedSquare:
    L: FiniteGroup
    M: FiniteGroup
    N: FiniteGroup
    P: FiniteGroup
    f: np.ndarray       # L -> M
    u: np.ndarray       # L -> N
    v: np.ndarray       # M -> P
    g: np.ndarray       # N -> P
    act_P_L: np.ndarray
    act_P_M: np.ndarray
    act_P_N: np.ndarray
    h: np.ndarray       # h[x, y] in L for x in M, y in N
    name: str = ""

    def groups(self) -> Dict[str, FiniteGroup]:
        return {"L": self.L, "M": self.M, "N": self.N, "P": self.P}


class _SqCtx(_Ops):
    def __init__(self, S: CrossedSquare):
        super().__init__(S.groups())
        self.S = S

    def f_(self, z): return int(self.S.f[z])
    def u_(self, z): return int(self.S.u[z])
    def v_(self, x): return int(self.S.v[x])
    def g_(self, y): return int(self.S.g[y])
    def h(self, x, y): return int(self.S.h[x, y])
    def aL(self, t, z): return int(self.S.act_P_L[t, z])
    def aM(self, t, x): return int(self.S.act_P_M[t, x])
    def aN(self, t, y): return int(self.S.act_P_N[t, y])


def _square_axioms() -> List[Axiom]:
    A = Axiom
    return [
        A("(1) f equivariant", "t:P z:L", "M", lambda c, t, z: c.f_(c.aL(t, z)),
          lambda c, t, z: c.aM(t, c.f_(z))),
        A("(1) u equivariant", "t:P z:L", "N", lambda c, t, z: c.u_(c.aL(t, z)),
          lambda c, t, z: c.aN(t, c.u_(z))),
        A("(2) f h", "x:M y:N", "M", lambda c, x, y: c.f_(c.h(x, y)),
          lambda c, x, y: c.mul("M", x, c.aM(c.g_(y), c.inv("M", x)))),
        A("(2) u h", "x:M y:N", "N", lambda c, x, y: c.u_(c.h(x, y)),
          lambda c, x, y: c.mul("N", c.aN(c.v_(x), y), c.inv("N", y))),
        A("(3) h(f z, y)", "z:L y:N", "L", lambda c, z, y: c.h(c.f_(z), y),
          lambda c, z, y: c.mul("L", z, c.aL(c.g_(y), c.inv("L", z)))),
        A("(3) h(x, u z)", "x:M z:L", "L", lambda c, x, z: c.h(x, c.u_(z)),
          lambda c, x, z: c.mul("L", c.aL(c.v_(x), z), c.inv("L", z))),
        A("(4) h(xx', y)", "x:M x2:M y:N", "L",
          lambda c, x, x2, y: c.h(c.mul("M", x, x2), y),
          lambda c, x, x2, y: c.mul("L", c.aL(c.v_(x), c.h(x2, y)), c.h(x, y))),
        A("(4) h(x, yy')", "x:M y:N y2:N", "L",
          lambda c, x, y, y2: c.h(x, c.mul("N", y, y2)),
          lambda c, x, y, y2: c.mul("L", c.h(x, y), c.aL(c.g_(y), c.h(x, y2)))),
        A("(5) h equivariant", "t:P x:M y:N", "L",
          lambda c, t, x, y: c.h(c.aM(t, x), c.aN(t, y)),
          lambda c, t, x, y: c.aL(t, c.h(x, y))),
    ]


def _square_shapes(S: CrossedSquare):
    L, M, N, P = S.L.order, S.M.order, S.N.order, S.P.order
    _shape(S.f, (L,), M, "f")
    _shape(S.u, (L,), N, "u")
    _shape(S.v, (M,), P, "v")
    _shape(S.g, (N,), P, "g")
    _shape(S.act_P_L, (P, L), L, "act_P_L")
    _shape(S.act_P_M, (P, M), M, "act_P_M")
    _shape(S.act_P_N, (P, N), N, "act_P_N")
    _shape(S.h, (M, N), L, "h")


def check_crossed_square(S: CrossedSquare, prefix: str = "") -> Report:
    """Exhaustive check of the crossed square conditions; raises ShapeMismatch on bad shapes."""
    _square_shapes(S)
    rep = Report(f"crossed square {S.name}")
    sub = Report("")
    for nm, dom, cod, arr in (("f", S.L, S.M, S.f), ("u", S.L, S.N, S.u),
                              ("v", S.M, S.P, S.v), ("g", S.N, S.P, S.g)):
        w = Homomorphism(dom, cod, arr, check=False).witness()
        sub.record(f"{nm} homomorphism", w is None, w)
    for nm, T, arr in (("L", S.L, S.act_P_L), ("M", S.M, S.act_P_M), ("N", S.N, S.act_P_N)):
        w = GroupAction(S.P, T, arr, check=False).witness()
        sub.record(f"P acts on {nm}", w is None, w)
    vf, gu = S.v[S.f], S.g[S.u]
    bad = np.nonzero(vf != gu)[0]
    sub.record("square commutes", len(bad) == 0, (int(bad[0]),) if len(bad) else None)
    if not sub.ok:
        rep.merge(sub, prefix)
        return rep
    for nm, X in (("g", CrossedModule(S.N, S.P, S.g, S.act_P_N)),
                  ("v", CrossedModule(S.M, S.P, S.v, S.act_P_M)),
                  ("v.f", CrossedModule(S.L, S.P, vf, S.act_P_L)),
                  ("g.u", CrossedModule(S.L, S.P, gu, S.act_P_L))):
        sub.merge(check_crossed_module(X), f"(1) {nm} ")
    run_axioms(_square_axioms(), S.groups(), _SqCtx(S), sub)
    # f and u are crossed modules for the actions through P
    sub.merge(check_crossed_module(CrossedModule(S.L, S.M, S.f, S.act_P_L[S.v])), "f ")
    sub.merge(check_crossed_module(CrossedModule(S.L, S.N, S.u, S.act_P_L[S.g])), "u ")
    rep.merge(sub, prefix)
    return rep


def conjugation_square(G: FiniteGroup) -> CrossedSquare:
    """G = G = G = G with identity maps, conjugation and h(x, y) = [x, y]."""
    e = np.arange(G.order)
    c = conjugation_action(G).table
    h = np.array([[G.comm(x, y) for y in G.elements()] for x in G.elements()], dtype=np.int64)
    return CrossedSquare(G, G, G, G, e, e, e, e, c, c, c, h, f"commutator square {G.name}")


def trivial_square() -> CrossedSquare:
    from .groups import trivial_group
    one = trivial_group()
    z = np.zeros(1, dtype=np.int64)
    return CrossedSquare(one, one, one, one, z, z, z, z, z[None], z[None], z[None], z[None],
                         "trivial square")


def mapping_cone(S: CrossedSquare) -> TwoCrossedModule:
    """The 2-crossed module L -> M x| N -> P of a crossed square.

    d2(z) = (f(z)^-1, u(z)), d1(x, y) = v(x) g(y) and
    {(x, y), (x', y')} = h(x, y y' y^-1).  N acts on M through g.
    """
    rep = check_crossed_square(S)
    if not rep.ok:
        raise GroupError("AxiomFailure", f"input square fails {rep.failed()[:3]}", rep.witnesses[:1])
    L, M, N, P = S.L, S.M, S.N, S.P
    C = semidirect(GroupAction(N, M, S.act_P_M[S.g], check=False), f"{M.name}x|{N.name}")
    nm = M.order
    xs = np.arange(C.order) % nm
    ys = np.arange(C.order) // nm
    d2 = np.array([int(M.inverse[S.f[z]]) + nm * int(S.u[z]) for z in L.elements()],
                  dtype=np.int64)
    d1 = P.table[S.v[xs], S.g[ys]]
    act_C = S.act_P_M[:, xs] + nm * S.act_P_N[:, ys]
    lift = np.empty((C.order, C.order), dtype=np.int64)
    for a in range(C.order):
        x, y = int(xs[a]), int(ys[a])
        conj = N.table[N.table[y, ys], N.inverse[y]]
        lift[a] = S.h[x, conj]
    return TwoCrossedModule(L, C, P, d2, d1, act_C, S.act_P_L.copy(), lift,
                            f"cone({S.name})")


# ---------------------------------------------------------------- squares of a 3-crossed module

def example1_squares(X: ThreeCrossedModule) -> List[CrossedSquare]:
    """Three squares K -> L = L = L for a 3-crossed module with trivial M.

    h1 = {,}_(2)(1), h2 = {,}_(0)(2) and h3(x, y) = {y, x}_(1)(0), with
    the lifting symbols read as inverses of the stored pairing tables.
    With an outer inverse on h3 the square fails whenever L is nonabelian.
    h2 is identically 1 when M is trivial, so the second square is a
    crossed square only when L is abelian and acts trivially on K.
    L acts on itself by conjugation and on K by the L_K action.
    """
    if X.M.order != 1:
        raise GroupError("RequiresTrivialM", f"M has order {X.M.order}")
    K, L = X.K, X.L
    ident = np.arange(L.order)
    conj = conjugation_action(L).table
    aK = X.actions["L_K"]
    inv = K.inverse
    h1 = inv[X.lifts["lift_2_1"]]
    h2 = inv[X.lifts["lift_0_2"]]
    h3 = inv[X.lifts["lift_1_0"].T]
    out = []
    for i, h in enumerate((h1, h2, h3), 1):
        out.append(CrossedSquare(K, L, L, L, X.d3.copy(), X.d3.copy(), ident, ident,
                                 aK.copy(), conj, conj, np.ascontiguousarray(h),
                                 f"C{i}({X.name})"))
    return out


def example1_identities(X: ThreeCrossedModule) -> Report:
    """Degenerate identities of the M-trivial case, on the same reading as example1_squares."""
    if X.M.order != 1:
        raise GroupError("RequiresTrivialM", f"M has order {X.M.order}")
    K, L = X.K, X.L
    c = _Ops({"K": K, "L": L})
    aK = X.actions["L_K"]
    inv = K.inverse
    b21 = inv[X.lifts["lift_2_1"]]
    b10 = inv[X.lifts["lift_1_0"]]
    b02 = inv[X.lifts["lift_0_2"]]
    d3 = X.d3
    A = Axiom
    axs = [
        A("{l, d3 k}_(2)(1) = (l.k) k^-1", "l:L k:K", "K",
          lambda c, l, k: int(b21[l, d3[k]]), lambda c, l, k: c.mul("K", aK[l, k], c.inv("K", k))),
        A("{ll', l''}_(2)(1) = l.{l', l''} {l, l''}", "l:L l2:L l3:L", "K",
          lambda c, l, l2, l3: int(b21[c.mul("L", l, l2), l3]),
          lambda c, l, l2, l3: c.mul("K", aK[l, b21[l2, l3]], b21[l, l3])),
        A("{l, l'l''}_(2)(1) = {l, l'} l'.{l, l''}", "l:L l2:L l3:L", "K",
          lambda c, l, l2, l3: int(b21[l, c.mul("L", l2, l3)]),
          lambda c, l, l2, l3: c.mul("K", b21[l, l2], aK[l2, b21[l, l3]])),
        A("d3 {l, l'}_(2)(1) = l (l' l^-1 l'^-1)", "l:L l2:L", "L",
          lambda c, l, l2: int(d3[b21[l, l2]]),
          lambda c, l, l2: c.mul("L", l, c.conj("L", l2, c.inv("L", l)))),
        A("{l', l}_(1)(0) = {l, l'}_(2)(1)", "l:L l2:L", "K",
          lambda c, l, l2: int(b10[l2, l]), lambda c, l, l2: int(b21[l, l2])),
        A("{l, l'}_(0)(2) = 1", "l:L l2:L", "K",
          lambda c, l, l2: int(b02[l, l2]), lambda c, l, l2: K.identity),
    ]
    rep = Report(f"M-trivial identities {X.name}")
    run_axioms(axs, {"K": K, "L": L}, c, rep)
    return rep


# ---------------------------------------------------------------- crossed 3-cubes

CORNERS = ("K", "L", "M", "N", "P", "Q", "R", "S")
SUBSETS = {"K": (0, 1, 2), "L": (0, 2), "M": (1, 2), "N": (0, 1),
           "P": (0,), "Q": (1,), "R": (2,), "S": ()}
EDGES = (("K", "L"), ("K", "M"), ("K", "N"), ("L", "P"), ("L", "R"), ("M", "Q"),
         ("M", "R"), ("N", "P"), ("N", "Q"), ("P", "S"), ("Q", "S"), ("R", "S"))
H_SHAPES = {"h1": ("Q", "L", "K"), "h2": ("P", "M", "K"), "h3": ("N", "R", "K"),
            "h4": ("P", "R", "L"), "h5": ("Q", "R", "M"), "h6": ("P", "Q", "N")}
# constituent squares as (top-left, M-corner, N-corner, bottom-right, h)
NINE_SQUARES = (("K", "Q", "L", "S", "h1"), ("K", "P", "M", "S", "h2"),
                ("K", "N", "R", "S", "h3"), ("L", "P", "R", "S", "h4"),
                ("M", "Q", "R", "S", "h5"), ("N", "P", "Q", "S", "h6"),
                ("K", "L", "M", "R", "h7"), ("K", "N", "L", "P", "h8"),
                ("K", "N", "M", "Q", "h9"))


@dataclass
class Crossed3Cube:
    groups: Dict[str, FiniteGroup]
    edges: Dict[tuple, np.ndarray]      # edges[("K", "L")] = lambda_L, ...
    actions: Dict[str, np.ndarray]      # actions["K"][s, k] = ^s k for s in S
    h: Dict[str, np.ndarray]            # h1 .. h6
    name: str = ""

    def map(self, src: str, dst: str) -> np.ndarray:
        """Composite edge map src -> dst (identity when equal)."""
        if src == dst:
            return np.arange(self.groups[src].order)
        if (src, dst) in self.edges:
            return self.edges[(src, dst)]
        a, b = set(SUBSETS[src]), set(SUBSETS[dst])
        if not b < a:
            raise GroupError("ShapeMismatch", f"no map {src} -> {dst}")
        for mid in CORNERS:
            m = set(SUBSETS[mid])
            if b < m < a and len(m) == len(a) - 1:
                return self.map(mid, dst)[self.edges[(src, mid)]]
        raise GroupError("ShapeMismatch", f"no map {src} -> {dst}")

    def act(self, actor: str, target: str) -> np.ndarray:
        """Action of a corner on another through its image in S."""
        return self.actions[target][self.map(actor, "S")]

    def h_table(self, name: str) -> np.ndarray:
        if name in self.h:
            return self.h[name]
        # reductions through a shared index
        if name == "h7":    # L x M -> K, h(l, m) = h2(l in P, m)
            return self.h["h2"][self.map("L", "P")]
        if name == "h8":    # N x L -> K, h(n, l) = h3(n, l in R)
            return self.h["h3"][:, self.map("L", "R")]
        if name == "h9":    # N x M -> K, h(n, m) = h3(n, m in R)
            return self.h["h3"][:, self.map("M", "R")]
        raise KeyError(name)

    def square(self, i: int) -> CrossedSquare:
        tl, a, b, br, hn = NINE_SQUARES[i]
        G = self.groups
        return CrossedSquare(G[tl], G[a], G[b], G[br], self.map(tl, a), self.map(tl, b),
                             self.map(a, br), self.map(b, br), self.act(br, tl),
                             self.act(br, a), self.act(br, b), self.h_table(hn),
                             f"({tl},{a},{b},{br}) {hn}")


def _cube_shapes(C: Crossed3Cube):
    G = C.groups
    for nm in CORNERS:
        if nm not in G:
            raise GroupError("ShapeMismatch", f"missing corner {nm}")
    for e in EDGES:
        if e not in C.edges:
            raise GroupError("ShapeMismatch", f"missing edge {e[0]} -> {e[1]}")
        _shape(C.edges[e], (G[e[0]].order,), G[e[1]].order, f"{e[0]}->{e[1]}")
    for nm in CORNERS:
        _shape(C.actions[nm], (G["S"].order, G[nm].order), G[nm].order, f"S on {nm}")
    for nm, (a, b, t) in H_SHAPES.items():
        _shape(C.h[nm], (G[a].order, G[b].order), G[t].order, nm)


class _CubeCtx(_Ops):
    def __init__(self, C: Crossed3Cube):
        super().__init__(C.groups)
        self.C = C
        self._m, self._a = {}, {}

    def mp(self, src, dst, x):
        key = (src, dst)
        if key not in self._m:
            self._m[key] = self.C.map(src, dst)
        return int(self._m[key][x])

    def act(self, actor, target, a, x):
        key = (actor, target)
        if key not in self._a:
            self._a[key] = self.C.act(actor, target)
        return int(self._a[key][a, x])

    def h(self, nm, a, b):
        return int(self.C.h_table(nm)[a, b])


def _cube_axioms() -> List[Axiom]:
    A = Axiom

    def c2_lhs(c, l, m, n):
        p = c.mul("P", c.mp("N", "P", n), c.mp("L", "P", l))
        q = c.mul("Q", c.mp("M", "Q", m), c.mp("N", "Q", n))
        return c.mul("K", c.h("h2", p, m), c.h("h1", q, l))

    def c2_rhs(c, l, m, n):
        return c.h("h3", n, c.mul("R", c.mp("L", "R", l), c.mp("M", "R", m)))

    def c3_lhs(c, p, q, r):
        x = c.inv("N", c.h("h6", p, c.inv("Q", q)))
        return c.act("Q", "K", q, c.h("h3", x, r))

    def c3_rhs(c, p, q, r):
        a = c.act("P", "K", p, c.h("h1", q, c.h("h4", c.inv("P", p), r)))
        y = c.inv("M", c.h("h5", q, c.inv("R", r)))
        b = c.act("R", "K", r, c.h("h2", p, y))
        return c.mul("K", a, b)

    return [
        A("(2)", "l:L m:M n:N", "K", c2_lhs, c2_rhs),
        A("(3)", "p:P q:Q r:R", "K", c3_lhs, c3_rhs, "left actions throughout"),
        A("(4) lambda_L h(p, m)", "p:P m:M", "L",
          lambda c, p, m: c.mp("K", "L", c.h("h2", p, m)),
          lambda c, p, m: c.h("h4", p, c.mp("M", "R", m))),
        A("(4) lambda_L h(n, r)", "n:N r:R", "L",
          lambda c, n, r: c.mp("K", "L", c.h("h3", n, r)),
          lambda c, n, r: c.h("h4", c.mp("N", "P", n), r)),
        A("(4) lambda_M h(q, l)", "q:Q l:L", "M",
          lambda c, q, l: c.mp("K", "M", c.h("h1", q, l)),
          lambda c, q, l: c.h("h5", q, c.mp("L", "R", l))),
        A("(4) lambda_M h(n, r)", "n:N r:R", "M",
          lambda c, n, r: c.mp("K", "M", c.h("h3", n, r)),
          lambda c, n, r: c.h("h5", c.mp("N", "Q", n), r)),
        A("(4) lambda_N h(p, m)", "p:P m:M", "N",
          lambda c, p, m: c.mp("K", "N", c.h("h2", p, m)),
          lambda c, p, m: c.h("h6", p, c.mp("M", "Q", m))),
        A("(4) lambda_N h(q, l)", "q:Q l:L", "N",
          lambda c, q, l: c.mp("K", "N", c.h("h1", q, l)),
          lambda c, q, l: c.inv("N", c.h("h6", c.mp("L", "P", l), q))),
        A("(5) h(v_Q m, l)", "m:M l:L", "K",
          lambda c, m, l: c.h("h1", c.mp("M", "Q", m), l),
          lambda c, m, l: c.inv("K", c.h("h2", c.mp("L", "P", l), m))),
        A("(5) h(n, v_R l)", "n:N l:L", "K",
          lambda c, n, l: c.h("h3", n, c.mp("L", "R", l)),
          lambda c, n, l: c.h("h1", c.mp("N", "Q", n), l)),
        A("(5) h(n, v_R m)", "n:N m:M", "K",
          lambda c, n, m: c.h("h3", n, c.mp("M", "R", m)),
          lambda c, n, m: c.h("h2", c.mp("N", "P", n), m)),
    ]


def check_crossed_3cube(C: Crossed3Cube) -> Report:
    """Nine constituent squares plus the compatibility equations, over all tuples."""
    _cube_shapes(C)
    rep = Report(f"crossed 3-cube {C.name}")
    G = C.groups
    for e in EDGES:
        w = Homomorphism(G[e[0]], G[e[1]], C.edges[e], check=False).witness()
        rep.record(f"{e[0]}->{e[1]} homomorphism", w is None, w)
    for nm in CORNERS:
        w = GroupAction(G["S"], G[nm], C.actions[nm], check=False).witness()
        rep.record(f"S acts on {nm}", w is None, w)
    # the six faces commute
    for a in CORNERS:
        for b in CORNERS:
            A, B = set(SUBSETS[a]), set(SUBSETS[b])
            if B < A and len(A) - len(B) == 2:
                mids = [m for m in CORNERS if B < set(SUBSETS[m]) < A]
                x, y = (C.edges[(m, b)][C.edges[(a, m)]] for m in mids)
                bad = np.nonzero(x != y)[0]
                rep.record(f"face {a}->{b} commutes", len(bad) == 0,
                           (int(bad[0]),) if len(bad) else None)
    # edges are S-equivariant
    for e in EDGES:
        src, dst = e
        lhs = C.edges[e][C.actions[src]]
        rhs = C.actions[dst][:, C.edges[e]]
        bad = np.argwhere(lhs != rhs)
        rep.record(f"{src}->{dst} S-equivariant", len(bad) == 0,
                   tuple(int(v) for v in bad[0]) if len(bad) else None)
    if not rep.ok:
        return rep
    for i in range(9):
        S = C.square(i)
        rep.merge(check_crossed_square(S), f"(1) {S.name}: ")
    run_axioms(_cube_axioms(), G, _CubeCtx(C), rep)
    return rep


def trivial_cube() -> Crossed3Cube:
    from .groups import trivial_group
    one = trivial_group()
    z = np.zeros(1, dtype=np.int64)
    return Crossed3Cube({c: one for c in CORNERS}, {e: z for e in EDGES},
                        {c: z[None] for c in CORNERS}, {k: z[None] for k in H_SHAPES},
                        "trivial cube")


# ---------------------------------------------------------------- cube of a simplicial group

# h = [w0(x), w1(y)] with each word a product of s_i(.)^(+-1).  Each pair is
# chosen so that d0, d1, d2 kill the commutator and d3 sends it to [x, y].
PORTER_WORDS = {
    "h1": (((2, 1),), ((2, 1), (1, -1))),             # [s2x, s2y s1y^-1]
    "h2": (((2, 1),), ((2, 1), (1, -1), (0, 1))),     # [s2x, s2y s1y^-1 s0y]
    "h3": (((2, 1),), ((2, 1), (1, -1))),             # [s2x, s2y s1y^-1]
}
# alternative words kept for comparison; with them h1 leaves NG_3 and h2
# fails its square on a nonabelian input
PORTER_WORDS_ALTERNATIVE = {
    "h1": (((1, 1), (0, -1)), ((2, -1), (1, -1))),    # [s1x s0x^-1, s2y^-1 s1y^-1]
    "h2": (((1, 1),), ((2, 1), (1, -1), (0, 1))),     # [s1x, s2y s1y^-1 s0y]
    "h3": (((2, 1),), ((2, 1), (1, -1))),
}


def porter_3cube(T: TruncatedSimplicialGroup, check: bool = True,
                 words: Optional[dict] = None) -> Crossed3Cube:
    """Crossed 3-cube of a simplicial group in degrees 2 and 3.

    K = NG_3, the other corners are intersections of face kernels in G_2
    (P = ker d0, Q = ker d1, R = ker d2, pairs for L, M, N), S = G_2.
    Edges out of K restrict d3, the rest are inclusions; G_2 acts by
    conjugation, on NG_3 through s2.
    """
    if T.k < 3:
        raise GroupError("InsufficientTruncation", f"needs levels up to 3, has {T.k}")
    if check:
        rep = check_simplicial(T)
        if not rep.ok:
            raise GroupError("SimplicialInvalid", f"{T.name} fails {rep.failed()[:3]}",
                             rep.witnesses[:1])
    G2, G3 = T.levels[2], T.levels[3]
    e2, e3 = G2.identity, G3.identity
    d = [T.d(2, i) for i in range(3)]
    ker = [set(np.nonzero(d[i] == T.levels[1].identity)[0].tolist()) for i in range(3)]
    d3 = [T.d(3, i) for i in range(4)]
    s = [T.s(2, i) for i in range(3)]
    moore = [x for x in G3.elements() if all(int(d3[i][x]) == T.levels[2].identity
                                             for i in range(3))]
    subs = {"K": Subgroup(G3, moore), "S": Subgroup(G2, range(G2.order))}
    for nm, idx in SUBSETS.items():
        if nm in ("K", "S"):
            continue
        mem = set(range(G2.order))
        for i in idx:
            mem &= ker[i]
        subs[nm] = Subgroup(G2, mem)
    groups, pos = {}, {}
    for nm in CORNERS:
        H, emb = subs[nm].as_group()
        groups[nm] = H
        pos[nm] = {int(m): j for j, m in enumerate(emb.image)}
    for nm in CORNERS:
        groups[nm].name = nm

    def member(nm, j):
        return subs[nm].members[j]

    def locate(nm, x, what):
        if x not in pos[nm]:
            raise GroupError("ConstructionInconsistent", f"{what} leaves {nm}", (what, x))
        return pos[nm][x]

    edges = {}
    for a, b in EDGES:
        img = []
        for j in range(groups[a].order):
            x = member(a, j)
            img.append(locate(b, int(d3[3][x]) if a == "K" else x, f"{a}->{b}"))
        edges[(a, b)] = np.array(img, dtype=np.int64)
    actions = {}
    for nm in CORNERS:
        t = np.empty((G2.order, groups[nm].order), dtype=np.int64)
        for g in G2.elements():
            for j in range(groups[nm].order):
                x = member(nm, j)
                y = G3.conj(int(s[2][g]), x) if nm == "K" else G2.conj(g, x)
                t[g, j] = locate(nm, y, f"action on {nm}")
        actions[nm] = t

    words = PORTER_WORDS if words is None else {**PORTER_WORDS, **words}

    def ev(word, x):
        r = G3.identity
        for i, e in word:
            t = int(s[i][x])
            r = G3.mul(r, t if e == 1 else G3.inv(t))
        return r

    h = {}
    for nm, (a, b, t) in H_SHAPES.items():
        tab = np.empty((groups[a].order, groups[b].order), dtype=np.int64)
        for i in range(groups[a].order):
            x = member(a, i)
            for j in range(groups[b].order):
                y = member(b, j)
                val = (G3.comm(ev(words[nm][0], x), ev(words[nm][1], y)) if nm in words
                       else G2.comm(x, y))
                tab[i, j] = locate(t, val, nm)
        h[nm] = tab
    return Crossed3Cube(groups, edges, actions, h, f"porter({T.name})")
