"""Ready-made simplicial groups used as test and demo fixtures."""

from __future__ import annotations

import numpy as np

from .groups import FiniteGroup, GroupAction, GroupError, Homomorphism, LazyGroup, semidirect
from .simplicial import TruncatedSimplicialGroup, constant_simplicial


def crossed_module_nerve(d: Homomorphism, act: GroupAction, k: int = 4,
                         name: str = "") -> TruncatedSimplicialGroup:
    """Nerve of the internal category M x| N  (d: M -> N, N acting on M).

    A 1-simplex (m, n) has d_0 = n and d_1 = d(m) n.  An n-simplex is a
    chain (x_1, ..., x_n) with d_0 x_i = d_1 x_{i+1}; multiplication is
    componentwise in M x| N.  Moore complex: N, M, 1, 1, ...
    """
    M, N = d.domain, d.codomain
    C = semidirect(act)
    nm = M.order

    def src(x):
        return x // nm

    def tgt(x):
        return C.mul(int(d.image[x % nm]) * nm, (x // nm) * nm) // nm

    def unit(v):
        return M.identity + nm * v

    def compose(a, b):
        # b then a, needs tgt(b) == src(a)
        return C.mul(C.mul(a, C.inv(unit(src(a)))), b)

    levels = [N]
    chains = [[()]]  # chains[n] lists n-tuples; level 0 tuples are objects
    chains[0] = [(v,) for v in N.elements()]
    # level 1: all of C
    chains.append([(x,) for x in C.elements()])
    for n in range(2, k + 1):
        prev = chains[n - 1]
        by_tgt = {}
        for x in C.elements():
            by_tgt.setdefault(tgt(x), []).append(x)
        nxt = []
        for ch in prev:
            for x in by_tgt.get(src(ch[-1]), []):
                nxt.append(ch + (x,))
        chains.append(nxt)
    index = [{c: i for i, c in enumerate(cs)} for cs in chains]

    def level_group(n):
        if n == 0:
            return N
        if n == 1:
            return C
        cs = chains[n]
        idx = index[n]
        order = len(cs)
        if order <= 4096:
            arr = np.array(cs, dtype=np.int64)
            table = np.empty((order, order), dtype=np.int64)
            for a in range(order):
                prods = C.table[arr[a][None, :], arr]
                table[a] = [idx[tuple(r)] for r in prods.tolist()]
            return FiniteGroup(table, idx[tuple([C.identity] * n)], None, f"nerve{n}")

        def mul(a, b):
            return idx[tuple(C.mul(x, y) for x, y in zip(cs[a], cs[b]))]

        def inv(a):
            return idx[tuple(C.inv(x) for x in cs[a])]

        return LazyGroup(order, mul, inv, idx[tuple([C.identity] * n)], None, f"nerve{n}")

    levels = [level_group(n) for n in range(k + 1)]

    def face(n, i, ch):
        if n == 1:
            x = ch[0]
            return src(x) if i == 0 else tgt(x)
        if i == 0:
            return index[n - 1][ch[1:]]
        if i == n:
            return index[n - 1][ch[:-1]]
        merged = ch[:i - 1] + (compose(ch[i - 1], ch[i]),) + ch[i + 1:]
        return index[n - 1][merged]

    def vertex(n, ch, i):
        if n == 0:
            return ch[0]
        if i == 0:
            return tgt(ch[0])
        return src(ch[i - 1])

    def degen(n, i, ch):
        v = vertex(n, ch, i)
        if n == 0:
            return index[1][(unit(v),)]
        new = ch[:i] + (unit(v),) + ch[i:]
        return index[n + 1][new]

    faces = []
    for n in range(1, k + 1):
        faces.append([np.array([face(n, i, ch) for ch in chains[n]], dtype=np.int64)
                      for i in range(n + 1)])
    degens = []
    for n in range(k):
        degens.append([np.array([degen(n, i, ch) for ch in chains[n]], dtype=np.int64)
                       for i in range(n + 1)])
    return TruncatedSimplicialGroup(levels, faces, degens, name or f"nerve({M.name}->{N.name})")


# ---------------------------------------------------------------- free class-2 groups

def _class2_group(r: int, p: int):
    """Relatively free group of class 2 and exponent p (p odd) on r letters.

    Elements are vectors (a, c) with a in F_p^r and c indexed by pairs i < j;
    (a, c)(a', c') = (a + a', c + c' + (a_j a'_i)_{i<j}).  The letters are
    e_i = (unit_i, 0) and e_j e_i = e_i e_j z_ij with z_ij central.
    """
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
    width = r + len(pairs)
    order = p ** width
    if order > 4096:
        raise GroupError(f"class-2 group on {r} letters has order {order}")
    radix = p ** np.arange(width, dtype=np.int64)
    vecs = (np.arange(order)[:, None] // radix[None, :]) % p
    a = vecs[:, :r]
    ii = np.array([i for i, _ in pairs], dtype=np.int64)
    jj = np.array([j for _, j in pairs], dtype=np.int64)
    table = np.empty((order, order), dtype=np.int64)
    for x in range(order):
        cross = a[x, jj][None, :] * a[:, ii] if pairs else np.zeros((order, 0), dtype=np.int64)
        prod = vecs[x][None, :] + vecs
        prod[:, r:] += cross
        table[x] = (prod % p) @ radix
    G = FiniteGroup(table, 0, None, f"F2({r},{p})")
    letters = [int(radix[i]) for i in range(r)]
    return G, letters, vecs, pairs


def _induced(G, letters, vecs, pairs, H, h_letters, images):
    # images[i] is the target letter index or None (identity)
    r = len(letters)
    lt = [H.identity if t is None else h_letters[t] for t in images]
    z = []
    for i, j in pairs:
        ei, ej = lt[i], lt[j]
        z.append(H.mul(H.mul(ej, ei), H.inv(H.mul(ei, ej))))
    out = np.empty(G.order, dtype=np.int64)
    for x in range(G.order):
        v = vecs[x]
        y = H.identity
        for i in range(r):
            y = H.mul(y, H.power(lt[i], int(v[i])))
        for q, w in enumerate(z):
            y = H.mul(y, H.power(w, int(v[r + q])))
        out[x] = y
    return out


def free_class2_interval(p: int = 3, k: int = 2) -> TruncatedSimplicialGroup:
    """Class-2 exponent-p quotient of the free simplicial group on the interval.

    The n-simplices of the interval with the 0 vertex collapsed are the
    strings 0^j 1^(n+1-j), j = 0..n; the verbal quotient is again
    simplicial because faces and degeneracies only permute letters.
    """
    data = [_class2_group(n + 1, p) for n in range(k + 1)]
    levels = [d[0] for d in data]

    def face(n, i, j):
        j2 = j - 1 if i < j else j
        return None if j2 == n else j2

    def degen(n, i, j):
        return j + 1 if i < j else j

    faces, degens = [], []
    for n in range(1, k + 1):
        G, L, V, P = data[n]
        H, HL = data[n - 1][0], data[n - 1][1]
        faces.append([_induced(G, L, V, P, H, HL, [face(n, i, j) for j in range(n + 1)])
                      for i in range(n + 1)])
    for n in range(k):
        G, L, V, P = data[n]
        H, HL = data[n + 1][0], data[n + 1][1]
        degens.append([_induced(G, L, V, P, H, HL, [degen(n, i, j) for j in range(n + 1)])
                       for i in range(n + 1)])
    return TruncatedSimplicialGroup(levels, faces, degens, f"F2(interval, p={p})")


# ---------------------------------------------------------------- 3-crossed modules

def _bilinear(n: int, scale: int = 1):
    # (x, y) -> scale * x * y in C_n, as a lifting table
    r = np.arange(n)
    return (scale * np.outer(r, r)) % n


def three_crossed_catalog():
    """Hand-built 3-crossed modules keyed by name.

    Every entry passes check_3crossed and is realized by to_simplicial.
    """
    from .groups import Subgroup, cyclic, quaternion, symmetric, trivial_group
    from .structures import (TwoCrossedModule, from_2crossed, from_components,
                             from_crossed_module, xmod_constructors)

    one, C2, C3, S3 = trivial_group(), cyclic(2), cyclic(3), symmetric(3)
    A3 = Subgroup(S3, [S3.mul(a, a) for a in S3.elements()])
    out = {}
    out["trivial"] = from_components(one, one, one, C2, name="trivial over C2")
    out["s3_inclusion"] = from_crossed_module(
        xmod_constructors("normal_inclusion", {"G": S3, "N": A3}))
    out["s3_inclusion"].name = "A3 <| S3"
    out["c2_identity"] = from_components(C2, C2, one, one, d3=np.arange(2), name="C2 = C2")
    # K -> L identity, L -> M trivial, M -> N identity, lifting {m, m'} = m m'
    out["c2_tower"] = from_components(C2, C2, C2, C2, d3=np.arange(2), d1=np.arange(2),
                                      lifts={"lift": _bilinear(2)}, name="C2 tower")
    # L -> M identity, the K-valued liftings carry all the information
    B = _bilinear(2)
    out["c2_klifts"] = from_components(
        C2, C2, C2, C2, d2=np.arange(2),
        lifts={"lift_1_0": B, "lift_2_1": B, "lift_0_2": B, "lift_10_2": B, "lift_20_1": B},
        name="C2 with K-liftings")
    # same pattern over C3, where a lifting and its inverse differ
    out["c3_klifts"] = from_components(
        C3, C3, C3, one, d2=np.arange(3),
        lifts={"lift_1_0": _bilinear(3), "lift_2_1": _bilinear(3), "lift_0_2": _bilinear(3),
               "lift_10_2": _bilinear(3, 2), "lift_20_1": _bilinear(3)},
        name="C3 with K-liftings")
    # [Q8, Q8] -> Q8 -> 1 with {m, m'} = [m', m]
    Q8 = quaternion()
    D = Subgroup(Q8, [Q8.comm(a, b) for a in Q8.elements() for b in Q8.elements()])
    Lg, emb = D.as_group()
    pos = {int(v): i for i, v in enumerate(emb.image)}
    lift = np.array([[pos[Q8.comm(b, a)] for b in Q8.elements()] for a in Q8.elements()])
    X2 = TwoCrossedModule(Lg, Q8, one, emb.image.copy(), np.zeros(Q8.order, dtype=np.int64),
                          np.zeros((1, Q8.order), dtype=np.int64) + np.arange(Q8.order),
                          np.zeros((1, Lg.order), dtype=np.int64) + np.arange(Lg.order), lift,
                          "commutator Q8")
    out["q8_commutator"] = from_2crossed(X2)
    out["s3_shifted"] = s3_shifted()
    return out


def s3_shifted():
    """S3 = S3 in degrees 3 and 2, from the coskeleton of (1, 1, S3)."""
    from .functors import to_three_crossed
    from .groups import symmetric, trivial_group
    from .simplicial import extend_by_coskeleton
    S3, one = symmetric(3), trivial_group()
    z = lambda n: np.zeros(n, dtype=np.int64)
    T = TruncatedSimplicialGroup([one, one, S3], [[z(1), z(1)], [z(6), z(6), z(6)]],
                                 [[z(1)], [z(1), z(1)]], "S3 in degree 2")
    X = to_three_crossed(extend_by_coskeleton(T), certified_length=3, check=False).three_crossed
    X.name = "S3 = S3 shifted"
    return X


def three_crossed_negatives():
    """Structures passing check_3crossed that no simplicial group realizes."""
    from .groups import cyclic
    from .structures import from_components

    C2 = cyclic(2)
    B = _bilinear(2)
    out = {}
    # {l, {m, m'}}_(2)(1) would have to vanish
    out["c2_bilinear"] = from_components(
        C2, C2, C2, C2, lifts={"lift": B, "lift_2_1": B, "lift_1_0": B}, name="C2 bilinear")
    # conjugation by s2 s0 m on K would not be injective
    out["c2_collapse"] = from_components(
        C2, C2, C2, C2, d3=np.arange(2), lifts={"lift_10_2": B, "lift_20_1": B},
        name="C2 collapsing")
    return out


def scenario_fixtures():
    """Scenario documents shipped under fixtures/, keyed by file stem."""
    from .cubes import conjugation_square, porter_3cube
    from .functors import to_simplicial
    from .groups import Subgroup, symmetric
    from .scenario import from_object
    from .structures import xmod_constructors

    S3 = symmetric(3)
    A3 = Subgroup(S3, [S3.mul(a, a) for a in S3.elements()])
    cat = three_crossed_catalog()
    out = {
        "s3_inclusion_xmod": from_object(
            xmod_constructors("normal_inclusion", {"G": S3, "N": A3}), "s3_inclusion_xmod"),
        "trivial_3xmod": from_object(cat["trivial"], "trivial_3xmod"),
        "c2_identity_3xmod": from_object(cat["c2_identity"], "c2_identity_3xmod"),
        "c2_tower_3xmod": from_object(cat["c2_tower"], "c2_tower_3xmod"),
        "s3_shifted_3xmod": from_object(cat["s3_shifted"], "s3_shifted_3xmod"),
        "c2_identity_simplicial": from_object(to_simplicial(cat["c2_identity"]).simplicial,
                                              "c2_identity_simplicial"),
        "commutator_square_s3": from_object(conjugation_square(S3), "commutator_square_s3"),
        "porter_cube_c2_tower": from_object(
            porter_3cube(to_simplicial(cat["c2_tower"]).simplicial), "porter_cube_c2_tower"),
    }
    return out
