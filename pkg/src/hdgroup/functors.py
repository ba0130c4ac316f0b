"""Simplicial groups to 3-crossed modules and back.

Forward: Moore complex NG_0..NG_3 (top term divided by the image of
NG_4 meeting the degenerate subgroup), actions by conjugation with
degeneracies, liftings as Peiffer pairings.

Inverse: H_n is built as iterated semidirect products whose elements are
products of s_alpha(x_alpha) over S(n) in increasing order, the x_alpha
running through K, L, M, N.  The index of an element is its mixed-radix
code in that order.  Faces and degeneracies then follow from pushing
d_i and s_j through each s_alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from .groups import (FiniteGroup, GroupAction, GroupError, Homomorphism, Subgroup, intersection,
                     is_isomorphic_small, quotient, semidirect, trivial_subgroup)
from .pairings import f_pairing
from .simplicial import (Report, TruncatedSimplicialGroup, check_simplicial, degenerate_subgroup,
                         extend_degenerate, homotopy_groups)
from .structures import (ACTION_NAMES, LIFT_NAMES, ThreeCrossedModule, check_3crossed)
from .surj import face_through_degeneracies, gen_S, normalize_degeneracies

# which Peiffer pairing realises each lifting
LIFT_PAIRS = {
    "lift": ((0,), (1,)),
    "lift_1_0": ((0,), (1,)),
    "lift_2_1": ((1,), (2,)),
    "lift_0_2": ((0,), (2,)),
    "lift_10_2": ((1, 0), (2,)),
    "lift_20_1": ((2, 0), (1,)),
    "lift_0_21": ((0,), (2, 1)),
}
LEVEL_NAMES = ("N", "M", "L", "K")


# ---------------------------------------------------------------- forward

@dataclass
class ForwardResult:
    three_crossed: ThreeCrossedModule
    quotient_projection: Homomorphism      # NG_3 (as a group) -> K
    embeddings: Dict[str, np.ndarray]      # group index -> index in G_n (K: coset representatives)
    notes: List[str] = field(default_factory=list)


def to_three_crossed(T: TruncatedSimplicialGroup, certified_length: Optional[int] = None,
                     check: bool = True) -> ForwardResult:
    if T.k < 3:
        raise GroupError("InsufficientTruncation", "needs levels 0..3")
    if check:
        rep = check_simplicial(T)
        if not rep.ok:
            raise GroupError("SimplicialInvalid", f"fails {rep.failed()[:3]}", rep.witnesses[:3])
    notes = []
    mc = T.moore()
    NG = [mc.terms[n] for n in range(4)]
    G3 = T.levels[3]
    if T.k >= 4:
        ng4 = mc.terms[4]
        if ng4.is_trivial():
            bound = trivial_subgroup(G3)
        else:
            D4 = degenerate_subgroup(T, 4)
            both = intersection(ng4, D4)
            bound = Subgroup(G3, [int(T.faces[4][4][x]) for x in both.members])
    elif certified_length is not None and certified_length <= 3:
        bound = trivial_subgroup(G3)
        notes.append("level 4 absent; quotient taken trivial on the caller's Moore length bound")
    else:
        raise GroupError("InsufficientTruncation",
                         "level 4 missing and Moore length <= 3 not certified")
    groups, emb = {}, {}
    for n, nm in enumerate(LEVEL_NAMES[:3]):
        H, e = NG[n].as_group()
        groups[nm], emb[nm] = H, e.image
    K3, e3 = NG[3].as_group()
    pos3 = {int(m): i for i, m in enumerate(e3.image)}
    sub = Subgroup(K3, [pos3[int(b)] for b in bound.members])
    K, proj, reps = quotient(K3, sub)
    groups["K"] = K
    emb["K"] = e3.image[np.asarray(reps, dtype=np.int64)]
    pos = {nm: {int(m): i for i, m in enumerate(emb[nm])} for nm in ("N", "M", "L")}

    def to_k(g3):
        return int(proj.image[pos3[int(g3)]])

    def down(nm, x, lvl):
        return pos[nm][int(T.faces[lvl][lvl][x])]

    N, M, L = groups["N"], groups["M"], groups["L"]
    d1 = np.array([down("N", x, 1) for x in emb["M"]], dtype=np.int64)
    d2 = np.array([down("M", x, 2) for x in emb["L"]], dtype=np.int64)
    d3 = np.array([pos["L"][int(T.faces[3][3][x])] for x in emb["K"]], dtype=np.int64)

    def conj_table(actor, alpha, lvl_actor, target, lvl_target):
        G = T.levels[lvl_target]
        out = np.empty((groups[actor].order, groups[target].order), dtype=np.int64)
        for a, ga in enumerate(emb[actor]):
            g = T.s_alpha(lvl_target, alpha, int(ga))
            for x, gx in enumerate(emb[target]):
                c = G.conj(g, int(gx))
                out[a, x] = to_k(c) if target == "K" else pos[target][c]
        return out

    actions = {
        "N_M": conj_table("N", (0,), 0, "M", 1),
        "N_L": conj_table("N", (1, 0), 0, "L", 2),
        "N_K": conj_table("N", (2, 1, 0), 0, "K", 3),
        "M_L": conj_table("M", (1,), 1, "L", 2),
        "M_K": conj_table("M", (2, 1), 1, "K", 3),
        "L_K": conj_table("L", (2,), 2, "K", 3),
    }
    shapes = {"lift": ("M", "M"), "lift_1_0": ("L", "L"), "lift_2_1": ("L", "L"),
              "lift_0_2": ("L", "L"), "lift_10_2": ("M", "L"), "lift_20_1": ("M", "L"),
              "lift_0_21": ("L", "M")}
    lifts = {}
    for nm, (gx, gy) in shapes.items():
        pair = LIFT_PAIRS[nm]
        n = 2 if nm == "lift" else 3
        tab = np.empty((groups[gx].order, groups[gy].order), dtype=np.int64)
        for i, x in enumerate(emb[gx]):
            for j, y in enumerate(emb[gy]):
                v = f_pairing(T, pair, int(x), int(y), n)
                tab[i, j] = pos["L"][v] if n == 2 else to_k(v)
        lifts[nm] = tab
    X = ThreeCrossedModule(K, L, M, N, d3, d2, d1, actions, lifts, f"F({T.name})")
    return ForwardResult(X, proj, emb, notes)


# ---------------------------------------------------------------- inverse

class _Levels:
    """Mixed-radix coordinates of H_n over S(n)."""

    def __init__(self, X: ThreeCrossedModule):
        self.X = X
        self.G = {0: X.N, 1: X.M, 2: X.L, 3: X.K}
        self.bd = {1: X.d1, 2: X.d2, 3: X.d3}
        self.S = {n: gen_S(n) for n in range(4)}
        self.radix = {n: [self.G[n - len(a)].order for a in self.S[n]] for n in range(4)}
        self.pos = {n: {a: i for i, a in enumerate(self.S[n])} for n in range(4)}
        self.ident = {n: [self.G[n - len(a)].identity for a in self.S[n]] for n in range(4)}
        self.weights = {}
        for n in range(4):
            w, acc = [], 1
            for r in self.radix[n]:
                w.append(acc)
                acc *= r
            self.weights[n] = np.array(w, dtype=np.int64)

    def order(self, n):
        return int(np.prod(self.radix[n]))

    def encode(self, n, coords):
        return int(sum(int(c) * int(w) for c, w in zip(coords, self.weights[n])))

    def decode_all(self, n):
        idx = np.arange(self.order(n), dtype=np.int64)
        out = []
        for r in self.radix[n]:
            out.append(idx % r)
            idx = idx // r
        return out

    def embed(self, n, alpha, values):
        """Index of s_alpha(value) in H_n for an array of values."""
        i = self.pos[n][alpha]
        base = sum(int(e) * int(w) for j, (e, w) in enumerate(zip(self.ident[n], self.weights[n]))
                   if j != i)
        return base + np.asarray(values, dtype=np.int64) * self.weights[n][i]


def _acts(X):
    return {k: np.asarray(v, dtype=np.int64) for k, v in X.actions.items()}


def _group_arrays(G: FiniteGroup):
    return G.table, np.asarray(G.inverse, dtype=np.int64)


def _conj_table(G: FiniteGroup):
    t, inv = _group_arrays(G)
    return t[t, inv[:, None]]


def _action_or_fail(actor, target, table, name):
    act = GroupAction(actor, target, table, check=False, name=name)
    w = act.witness()
    if w is not None:
        raise GroupError("ConstructionInconsistent", f"{name} is not an action: {w}", w)
    return act


def build_levels(X: ThreeCrossedModule):
    """H_0..H_3 as groups; returns (levels, coordinates helper)."""
    K, L, M, N = X.K, X.L, X.M, X.N
    for G in (K, L, M, N):
        if not G.materialized:
            raise GroupError("OrderCapExceeded", "component groups must be materialized")
    a = _acts(X)
    f = {k: np.asarray(v, dtype=np.int64) for k, v in X.lifts.items()}
    tK, iK = _group_arrays(K)
    tL, iL = _group_arrays(L)
    tM, iM = _group_arrays(M)
    cL, cM = _conj_table(L), _conj_table(M)
    nK, nL, nM = K.order, L.order, M.order
    eK, eL, eM = K.identity, L.identity, M.identity
    d1, d2, d3 = (np.asarray(x, dtype=np.int64) for x in (X.d1, X.d2, X.d3))

    H1 = semidirect(_action_or_fail(N, M, a["N_M"], "N on M"), "H1")
    H21 = semidirect(_action_or_fail(M, L, a["M_L"], "M on L"), "L x| M")

    # A(m, l) = s_0 m . l . s_0 m^-1 written through the structure
    A = tL[iL[d3[f["lift_10_2"]]], a["N_L"][d1[:, None], np.arange(nL)[None, :]]]

    # action of H_1 = M x| N on L x| M through s_0
    u = np.arange(nL * nM)
    lu, mu = u % nL, u // nL
    phi = np.empty((H1.order, nL * nM), dtype=np.int64)
    for h in range(H1.order):
        m2, n = h % nM, h // nM
        after_n = a["N_L"][n, lu] + nL * a["N_M"][n, mu]
        l0, m0 = after_n % nL, after_n // nL
        phi[h] = tL[A[m2, l0], f["lift"][m2, m0]] + nL * cM[m2, m0]
    H2 = semidirect(_action_or_fail(H1, H21, phi, "H1 on L x| M"), "H2")

    H32 = semidirect(_action_or_fail(L, K, a["L_K"], "L on K"), "K x| L")
    # action of L x| M on K x| L through s_1
    v = np.arange(nK * nL)
    kv, lv = v % nK, v // nK
    psi = np.empty((nL * nM, nK * nL), dtype=np.int64)
    for h in range(nL * nM):
        l, m = h % nL, h // nL
        after_m = a["M_K"][m, kv] + nK * a["M_L"][m, lv]
        k0, l0 = after_m % nK, after_m // nK
        psi[h] = tK[a["M_K"][d2[l], k0], f["lift_2_1"][l, l0]] + nK * cL[l, l0]
    H31 = semidirect(_action_or_fail(H21, H32, psi, "L x| M on K x| L"), "H3(1)")

    # action of H_2 on H3(1) through s_0, defined on the generators k, s2 l, s1 l, s2 s1 m
    nU = H31.order
    tU = H31.table
    w = np.array([1, nK, nK * nL, nK * nL * nL], dtype=np.int64)

    def enc(k, l1, l2, m1):
        return k * w[0] + l1 * w[1] + l2 * w[2] + m1 * w[3]

    U = np.arange(nU)
    uk, ul1, ul2, um1 = U % nK, (U // nK) % nL, (U // (nK * nL)) % nL, U // (nK * nL * nL)
    K_, L_, M_ = np.arange(nK), np.arange(nL), np.arange(nM)

    def extend(Tk, Ts2, Ts1, Tm):
        return tU[tU[tU[Tk[uk], Ts2[ul1]], Ts1[ul2]], Tm[um1]]

    def theta_n(n):
        return extend(enc(a["N_K"][n, K_], eL, eL, eM), enc(eK, a["N_L"][n, L_], eL, eM),
                      enc(eK, eL, a["N_L"][n, L_], eM), enc(eK, eL, eL, a["N_M"][n, M_]))

    def theta_s1s0(m):
        return extend(enc(a["N_K"][d1[m], K_], eL, eL, eM),
                      enc(f["lift_10_2"][m, L_], A[m, L_], eL, eM),
                      enc(eK, eL, A[m, L_], eM),
                      enc(eK, eL, f["lift"][m, M_], cM[m, M_]))

    def theta_s2s0(m):
        mlL = a["M_L"][m, L_]
        return extend(enc(tK[iK[f["lift_10_2"][m, d3[K_]]], a["N_K"][d1[m], K_]], eL, eL, eM),
                      enc(eK, A[m, L_], eL, eM),
                      enc(f["lift_20_1"][m, L_], tL[A[m, L_], iL[mlL]], mlL, eM),
                      enc(eK, f["lift"][m, M_], eL, cM[m, M_]))

    def theta_s0(l):
        c = tL[l, iL[a["M_L"][M_, l]]]
        return extend(enc(tK[iK[f["lift_10_2"][d2[l], d3[K_]]], K_], eL, eL, eM),
                      enc(f["lift_0_2"][l, L_], L_, eL, eM),
                      enc(f["lift_1_0"][l, L_], tL[tL[L_, l], tL[iL[L_], iL[l]]], cL[l, L_], eM),
                      enc(f["lift_0_21"][l, M_], iL[c], c, M_))

    Tn = [theta_n(n) for n in range(N.order)]
    Tm3 = [theta_s1s0(m) for m in range(nM)]
    Tm2 = [theta_s2s0(m) for m in range(nM)]
    Tl = [theta_s0(l) for l in range(nL)]
    theta = np.empty((H2.order, nU), dtype=np.int64)
    for h in range(H2.order):
        l3 = h % nL
        m2 = (h // nL) % nM
        m3 = (h // (nL * nM)) % nM
        n = h // (nL * nM * nM)
        theta[h] = Tl[l3][Tm2[m2][Tm3[m3][Tn[n]]]]
    H3 = semidirect(_action_or_fail(H2, H31, theta, "H2 on H3(1)"), "H3")
    return [N, H1, H2, H3], _Levels(X)


def _faces_and_degens(levels, C: _Levels):
    faces, degens = [], []
    for n in range(1, 4):
        coords = C.decode_all(n)
        H = levels[n - 1]
        per = []
        for i in range(n + 1):
            acc = None
            for a_, alpha in enumerate(C.S[n]):
                m = n - len(alpha)
                beta, k = face_through_degeneracies(i, alpha)
                x = coords[a_]
                if k is None:
                    y = x
                elif k == m:
                    y = C.bd[m][x]
                else:
                    y = np.full_like(x, C.G[m - 1].identity)
                img = C.embed(n - 1, beta, y)
                acc = img if acc is None else _mul_arrays(H, acc, img)
            per.append(acc)
        faces.append(per)
    for n in range(3):
        coords = C.decode_all(n)
        H = levels[n + 1]
        per = []
        for j in range(n + 1):
            acc = None
            for a_, alpha in enumerate(C.S[n]):
                gamma = normalize_degeneracies((j,) + alpha)
                img = C.embed(n + 1, gamma, coords[a_])
                acc = img if acc is None else _mul_arrays(H, acc, img)
            per.append(acc)
        degens.append(per)
    return faces, degens


def _mul_arrays(H, a, b):
    if H.materialized:
        return H.table[a, b]
    return np.array([H.mul(int(x), int(y)) for x, y in zip(a, b)], dtype=np.int64)


@dataclass
class InverseResult:
    simplicial: TruncatedSimplicialGroup
    embeddings: Dict[str, np.ndarray]   # K, L, M, N index -> Moore term element of H_n
    coordinates: _Levels
    report: Report


def to_simplicial(X: ThreeCrossedModule, check_input: bool = True) -> InverseResult:
    if check_input:
        rep = check_3crossed(X)
        if not rep.ok:
            raise GroupError("AxiomFailure", f"input fails {rep.failed()[:3]}", rep.witnesses[:3])
    levels, C = build_levels(X)
    faces, degens = _faces_and_degens(levels, C)
    T = TruncatedSimplicialGroup(levels, faces, degens, f"H({X.name})")
    rep = check_simplicial(T)
    if not rep.ok:
        raise GroupError("ConstructionInconsistent", f"fails {rep.failed()[:3]}", rep.witnesses[:3])
    emb = {nm: C.embed(n, (), np.arange(C.G[n].order)) for n, nm in enumerate(LEVEL_NAMES)}
    emb["N"] = np.arange(X.N.order)
    mc = T.moore()
    for n, nm in enumerate(LEVEL_NAMES):
        ok = tuple(sorted(emb[nm].tolist())) == mc.terms[n].members
        rep.record(f"Moore term {n} is {nm}", ok)
    for n, nm in ((1, "M"), (2, "L"), (3, "K")):
        below = LEVEL_NAMES[n - 1]
        got = T.faces[n][n][emb[nm]]
        want = emb[below][C.bd[n]]
        rep.record(f"boundary d{n} on {nm}", bool(np.all(got == want)))
    if not rep.ok:
        raise GroupError("ConstructionInconsistent", f"fails {rep.failed()[:3]}", rep.witnesses[:3])
    return InverseResult(T, emb, C, rep)


# ---------------------------------------------------------------- round trip

def extend_to_level4(T: TruncatedSimplicialGroup, limit: int = 400000) -> TruncatedSimplicialGroup:
    return extend_degenerate(T, limit)


def compare_3crossed(X: ThreeCrossedModule, Y: ThreeCrossedModule) -> Report:
    rep = Report(f"compare {X.name} / {Y.name}")
    for nm in ("K", "L", "M", "N"):
        A, B = X.groups()[nm], Y.groups()[nm]
        same = A.order == B.order and A.identity == B.identity and (
            not A.materialized or not B.materialized or np.array_equal(A.table, B.table))
        rep.record(f"group {nm}", same)
    for nm in ("d1", "d2", "d3"):
        rep.record(nm, np.array_equal(getattr(X, nm), getattr(Y, nm)))
    for nm in ACTION_NAMES:
        rep.record(f"action {nm}", np.array_equal(X.actions[nm], Y.actions[nm]))
    for nm in LIFT_NAMES:
        rep.record(nm, np.array_equal(X.lifts[nm], Y.lifts[nm]))
    return rep


def level4_order(X: ThreeCrossedModule) -> int:
    """|H_4| of the degenerate extension: prod over S(4) with NH_4 trivial."""
    sizes = {0: X.N.order, 1: X.M.order, 2: X.L.order, 3: X.K.order, 4: 1}
    out = 1
    for alpha in gen_S(4):
        out *= sizes[4 - len(alpha)]
    return out


def roundtrip_check(X: ThreeCrossedModule, level4: Optional[bool] = None,
                    limit: int = 400000) -> Report:
    """X -> H -> forward(H) compared table by table with X.

    level4=None builds the degenerate level-4 extension when its order is
    at most limit, otherwise it uses certified length 3.
    """
    inv = to_simplicial(X)
    T = inv.simplicial
    rep = Report(f"roundtrip {X.name}")
    if level4 is None:
        level4 = level4_order(X) <= limit
    if level4:
        T4 = extend_to_level4(T, limit)
        ng4 = T4.moore().terms[4]
        rep.record("NH4 trivial on the degenerate extension", ng4.is_trivial())
        fwd = to_three_crossed(T4, check=False)
    else:
        fwd = to_three_crossed(T, certified_length=3, check=False)
        rep.notes.append("level 4 not built; quotient by d4(NH4 meet D4) taken trivial")
    Y = _relabel(fwd, inv)
    rep.merge(compare_3crossed(X, Y))
    return rep


def _relabel(fwd: ForwardResult, inv: InverseResult) -> ThreeCrossedModule:
    """Rewrite forward output in the index sets of the original components."""
    Y = fwd.three_crossed
    perm = {}
    for nm in LEVEL_NAMES:
        # perm[nm][i] = index in Y of original element i
        where = {int(v): j for j, v in enumerate(fwd.embeddings[nm])}
        perm[nm] = np.array([where[int(v)] for v in inv.embeddings[nm]], dtype=np.int64)
    X0 = inv.coordinates.X
    back = {nm: np.argsort(perm[nm]) for nm in LEVEL_NAMES}
    G = {"K": X0.K, "L": X0.L, "M": X0.M, "N": X0.N}

    def grp(nm):
        Gy = Y.groups()[nm]
        p, b = perm[nm], back[nm]
        t = b[Gy.table[p[:, None], p[None, :]]]
        return FiniteGroup(t, int(b[Gy.identity]), None, G[nm].name)

    def mp(arr, src, dst):
        return back[dst][np.asarray(arr)[perm[src]]]

    acts = {}
    for nm in ACTION_NAMES:
        s, t = nm.split("_")
        acts[nm] = back[t][Y.actions[nm][perm[s][:, None], perm[t][None, :]]]
    shapes = {"lift": ("M", "M", "L"), "lift_1_0": ("L", "L", "K"), "lift_2_1": ("L", "L", "K"),
              "lift_0_2": ("L", "L", "K"), "lift_10_2": ("M", "L", "K"),
              "lift_20_1": ("M", "L", "K"), "lift_0_21": ("L", "M", "K")}
    lifts = {nm: back[z][Y.lifts[nm][perm[x][:, None], perm[y][None, :]]]
             for nm, (x, y, z) in shapes.items()}
    return ThreeCrossedModule(grp("K"), grp("L"), grp("M"), grp("N"), mp(Y.d3, "K", "L"),
                              mp(Y.d2, "L", "M"), mp(Y.d1, "M", "N"), acts, lifts, Y.name)


# ---------------------------------------------------------------- homotopy

def pi_prime(X: ThreeCrossedModule) -> List[FiniteGroup]:
    """pi'_1..pi'_4: N/d1(M), ker d1/im d2, ker d2/im d3, ker d3."""
    chain = [X.N, X.M, X.L, X.K]
    bd = [None, X.d1, X.d2, X.d3]
    out = []
    for n, G in enumerate(chain):
        if n == 0:
            cyc = Subgroup(G, G.elements())
        else:
            e = chain[n - 1].identity
            cyc = Subgroup(G, [x for x in G.elements() if bd[n][x] == e])
        C, emb = cyc.as_group()
        p = {int(v): i for i, v in enumerate(emb.image)}
        if n == 3:
            B = Subgroup(C, [C.identity])
        else:
            B = Subgroup(C, [p[int(bd[n + 1][y])] for y in chain[n + 1].elements()])
        Q, _, _ = quotient(C, B)
        out.append(Q)
    return out


def homotopy_report(T: TruncatedSimplicialGroup, X: ThreeCrossedModule) -> Report:
    """Simplicial pi_1..pi_4 against pi' of the 3-crossed module."""
    rep = Report(f"homotopy {T.name}")
    simp = homotopy_groups(T, certified_length=3)
    prime = pi_prime(X)
    for i in range(4):
        A = simp[i].group if i < len(simp) else None
        B = prime[i]
        if A is None:
            rep.record(f"pi{i + 1}", False, "level missing")
            continue
        iso = A.order == B.order and is_isomorphic_small(A, B) is not None
        rep.record(f"pi{i + 1}", iso, (A.order, B.order))
    return rep


# ---------------------------------------------------------------- transport gate

def coordinate_transport(T: TruncatedSimplicialGroup, certified_length: Optional[int] = 3) -> Report:
    """Compare T with the inverse construction on its forward image.

    Each x in T_n maps to the element of H_n with the same Moore
    coordinates; the map must be a bijective homomorphism commuting
    with every face and degeneracy.  Needs Moore length <= 3.
    """
    from .simplicial import coordinates
    rep = Report(f"transport {T.name}")
    fwd = to_three_crossed(T, certified_length=certified_length, check=False)
    X = fwd.three_crossed
    if fwd.quotient_projection.domain.order != X.K.order:
        rep.notes.append("top Moore term is divided by a nontrivial boundary; transport skipped")
        return rep
    inv = to_simplicial(X, check_input=False)
    H, C = inv.simplicial, inv.coordinates
    where = {nm: {int(v): i for i, v in enumerate(fwd.embeddings[nm])} for nm in LEVEL_NAMES}
    phi = []
    for n in range(4):
        img = np.empty(T.levels[n].order, dtype=np.int64)
        for x in T.levels[n].elements():
            c = coordinates(T, n, x)
            img[x] = C.encode(n, [where[LEVEL_NAMES[n - len(a)]][c[a]] for a in C.S[n]])
        phi.append(img)
        rep.record(f"bijective level {n}", len(set(img.tolist())) == H.levels[n].order
                   and T.levels[n].order == H.levels[n].order)
        w = Homomorphism(T.levels[n], H.levels[n], img, check=False).witness()
        rep.record(f"homomorphism level {n}", w is None, w)
    for n in range(1, 4):
        for i in range(n + 1):
            ok = np.array_equal(phi[n - 1][T.faces[n][i]], H.faces[n][i][phi[n]])
            rep.record(f"d{i} on level {n}", ok)
    for n in range(3):
        for j in range(n + 1):
            ok = np.array_equal(phi[n + 1][T.degens[n][j]], H.degens[n][j][phi[n]])
            rep.record(f"s{j} on level {n}", ok)
    return rep
