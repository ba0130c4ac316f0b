"""Truncated simplicial groups and their Moore complexes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from .groups import (FiniteGroup, GroupError, Homomorphism, Subgroup, generating_set,
                     identity_map, image_of, intersection, kernel_image, quotient,
                     subgroup_closure, trivial_subgroup, whole)
from .surj import SurjTuple, face_through_degeneracies, gen_S, normalize_degeneracies


class TruncatedSimplicialGroup:
    """Levels G_0..G_k with faces d_i: G_n -> G_{n-1} and degeneracies s_i: G_n -> G_{n+1}.

    faces[n][i] is d_i on G_n (n >= 1, 0 <= i <= n) and degens[n][i] is s_i
    on G_n (n < k, 0 <= i <= n), both stored as index arrays.
    """

    def __init__(self, levels: List[FiniteGroup], faces, degens, name: str = ""):
        self.levels = list(levels)
        self.k = len(levels) - 1
        # faces[n - 1] lists d_0..d_n on G_n; stored shifted so self.faces[n] is level n
        self.faces = [None] + [[np.asarray(f, dtype=np.int64) for f in fs] for fs in faces]
        self.degens = [[np.asarray(s, dtype=np.int64) for s in ss] for ss in degens]
        self.name = name
        self._moore = None

    def d(self, n: int, i: int) -> np.ndarray:
        return self.faces[n][i]

    def s(self, n: int, i: int) -> np.ndarray:
        return self.degens[n][i]

    def face_hom(self, n: int, i: int) -> Homomorphism:
        return Homomorphism(self.levels[n], self.levels[n - 1], self.faces[n][i], check=False)

    def degen_hom(self, n: int, i: int) -> Homomorphism:
        return Homomorphism(self.levels[n], self.levels[n + 1], self.degens[n][i], check=False)

    def s_alpha(self, n: int, alpha: SurjTuple, x: int) -> int:
        """s_alpha applied to x in G_{n - #alpha}; result in G_n."""
        lvl = n - len(alpha)
        for i in reversed(alpha):
            x = int(self.degens[lvl][i][x])
            lvl += 1
        return x

    def moore(self) -> "MooreComplex":
        if self._moore is None:
            self._moore = moore_complex(self)
        return self._moore

    def truncate(self, k: int) -> "TruncatedSimplicialGroup":
        return TruncatedSimplicialGroup(self.levels[:k + 1], self.faces[1:k + 1], self.degens[:k],
                                        self.name)

    def __repr__(self):
        return f"<TruncatedSimplicialGroup {self.name} orders={[G.order for G in self.levels]}>"


@dataclass
class Report:
    """Pass/fail summary with replayable witnesses."""
    name: str
    checks: Dict[str, bool] = field(default_factory=dict)
    witnesses: List[tuple] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    max_witnesses: int = 50

    @property
    def ok(self) -> bool:
        return not self.witnesses and all(self.checks.values())

    def record(self, tag: str, passed: bool, witness=None):
        self.checks[tag] = self.checks.get(tag, True) and passed
        if not passed and witness is not None and len(self.witnesses) < self.max_witnesses:
            self.witnesses.append((tag,) + tuple(witness))
        elif not passed and witness is None and len(self.witnesses) < self.max_witnesses:
            self.witnesses.append((tag,))

    def merge(self, other: "Report", prefix: str = ""):
        for k, v in other.checks.items():
            self.checks[prefix + k] = self.checks.get(prefix + k, True) and v
        for w in other.witnesses:
            if len(self.witnesses) < self.max_witnesses:
                self.witnesses.append((prefix + w[0],) + tuple(w[1:]))
        self.notes.extend(other.notes)

    def failed(self) -> List[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok,
                "checks": {k: ("PASS" if v else "FAIL") for k, v in self.checks.items()},
                "witnesses": [[str(x) if not isinstance(x, (int, np.integer)) else int(x)
                               for x in w] for w in self.witnesses],
                "notes": list(self.notes)}


def _first_mismatch(a: np.ndarray, b: np.ndarray):
    bad = np.nonzero(a != b)[0]
    return None if len(bad) == 0 else int(bad[0])


def check_simplicial(T: TruncatedSimplicialGroup) -> Report:
    rep = Report(f"simplicial {T.name}")
    G = T.levels
    for n in range(1, T.k + 1):
        if len(T.faces[n]) != n + 1:
            raise GroupError("ShapeMismatch", f"level {n} needs {n + 1} faces")
        for i, f in enumerate(T.faces[n]):
            if f.shape != (G[n].order,) or np.any((f < 0) | (f >= G[n - 1].order)):
                raise GroupError("ShapeMismatch", f"d_{i} on level {n} has wrong shape or range")
            w = Homomorphism(G[n], G[n - 1], f, check=False).witness()
            rep.record(f"hom d{i}^{n}", w is None, w)
    for n in range(T.k):
        if len(T.degens[n]) != n + 1:
            raise GroupError("ShapeMismatch", f"level {n} needs {n + 1} degeneracies")
        for i, s in enumerate(T.degens[n]):
            if s.shape != (G[n].order,) or np.any((s < 0) | (s >= G[n + 1].order)):
                raise GroupError("ShapeMismatch", f"s_{i} on level {n} has wrong shape or range")
            w = Homomorphism(G[n], G[n + 1], s, check=False).witness()
            rep.record(f"hom s{i}^{n}", w is None, w)
    d, s = T.faces, T.degens
    # d_i d_j = d_{j-1} d_i for i < j
    for n in range(2, T.k + 1):
        for j in range(n + 1):
            for i in range(j):
                x = _first_mismatch(d[n - 1][i][d[n][j]], d[n - 1][j - 1][d[n][i]])
                rep.record("d_i d_j = d_{j-1} d_i", x is None, None if x is None else (n, i, j, x))
    for n in range(T.k):
        ident = np.arange(G[n].order)
        for j in range(n + 1):
            sj = s[n][j]
            for i in range(n + 2):
                di = d[n + 1][i]
                lhs = di[sj]
                if i < j:
                    rhs = s[n - 1][j - 1][d[n][i]]
                    tag = "d_i s_j = s_{j-1} d_i"
                elif i == j or i == j + 1:
                    rhs = ident
                    tag = "d_j s_j = d_{j+1} s_j = id"
                else:
                    rhs = s[n - 1][j][d[n][i - 1]]
                    tag = "d_i s_j = s_j d_{i-1}"
                x = _first_mismatch(lhs, rhs)
                rep.record(tag, x is None, None if x is None else (n, i, j, x))
    for n in range(T.k - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                x = _first_mismatch(s[n + 1][i][s[n][j]], s[n + 1][j + 1][s[n][i]])
                rep.record("s_i s_j = s_{j+1} s_i", x is None, None if x is None else (n, i, j, x))
    return rep


@dataclass
class MooreComplex:
    terms: List[Subgroup]
    boundaries: List[Optional[np.ndarray]]  # boundaries[n] maps NG_n -> NG_{n-1} as parent indices

    def term_group(self, n: int):
        return self.terms[n].as_group()


def moore_complex(T: TruncatedSimplicialGroup) -> MooreComplex:
    terms = [whole(T.levels[0])]
    bounds: List[Optional[np.ndarray]] = [None]
    for n in range(1, T.k + 1):
        mask = np.ones(T.levels[n].order, dtype=bool)
        for i in range(n):
            mask &= T.faces[n][i] == T.levels[n - 1].identity
        terms.append(Subgroup(T.levels[n], np.nonzero(mask)[0]))
        bounds.append(T.faces[n][n])
    return MooreComplex(terms, bounds)


def moore_chain_report(T: TruncatedSimplicialGroup) -> Report:
    rep = Report("moore chain")
    mc = T.moore()
    for n in range(1, T.k + 1):
        img = Subgroup(T.levels[n - 1], [int(mc.boundaries[n][x]) for x in mc.terms[n].members])
        rep.record(f"image of d{n} inside NG{n - 1}", img.issubset(mc.terms[n - 1]))
        Hn, emb = mc.terms[n - 1].as_group()
        pos = {m: i for i, m in enumerate(emb.image.tolist())}
        sub = Subgroup(Hn, [pos[m] for m in img.members if m in pos])
        rep.record(f"image of d{n} normal in NG{n - 1}", sub.is_normal())
        if n >= 2:
            e = T.levels[n - 2].identity
            bad = [x for x in mc.terms[n].members
                   if T.faces[n - 1][n - 1][T.faces[n][n][x]] != e]
            rep.record(f"d{n - 1} d{n} trivial", not bad, bad[:1] or None)
    return rep


def moore_length(T: TruncatedSimplicialGroup) -> int:
    mc = T.moore()
    length = 0
    for n in range(T.k + 1):
        if not mc.terms[n].is_trivial():
            length = n
    return length


def degenerate_subgroup(T: TruncatedSimplicialGroup, n: int) -> Subgroup:
    gens = []
    for i in range(n):
        for g in generating_set(T.levels[n - 1]):
            gens.append(int(T.degens[n - 1][i][g]))
    return subgroup_closure(T.levels[n], gens)


# ---------------------------------------------------------------- coordinates

def coordinates(T: TruncatedSimplicialGroup, n: int, x: int) -> Dict[SurjTuple, int]:
    """Split x in G_n into Moore pieces x_alpha in NG_{n-#alpha}, alpha in S(n).

    Peels G_n^(j) = G_n^(j+1) x| s_j G_{n-1}^(j), where G_n^(j) is the
    intersection of ker d_0..d_{j-1}, starting from j = 0.
    """
    return _coords(T, n, int(x), 0)


def _coords(T, n, x, j):
    if n == 0 or j == n:
        return {(): x}
    G = T.levels[n]
    y = int(T.faces[n][j][x])
    z = G.mul(x, G.inv(int(T.degens[n - 1][j][y])))
    out = dict(_coords(T, n, z, j + 1))
    for beta, v in _coords(T, n - 1, y, j).items():
        out[normalize_degeneracies((j,) + beta)] = v
    return out


def recompose(T: TruncatedSimplicialGroup, n: int, coords: Dict[SurjTuple, int]) -> int:
    """Product of s_alpha(x_alpha) over S(n) in increasing order."""
    G = T.levels[n]
    r = G.identity
    for alpha in gen_S(n):
        r = G.mul(r, T.s_alpha(n, alpha, coords[alpha]))
    return r


def coordinates_report(T: TruncatedSimplicialGroup, levels=None) -> Report:
    rep = Report(f"coordinates {T.name}")
    mc = T.moore()
    for n in (range(T.k + 1) if levels is None else levels):
        expected = 1
        for alpha in gen_S(n):
            expected *= mc.terms[n - len(alpha)].order
        rep.record(f"order identity level {n}", expected == T.levels[n].order,
                   (T.levels[n].order, expected))
        for x in T.levels[n].elements():
            c = coordinates(T, n, x)
            ok = all(c[a] in mc.terms[n - len(a)] for a in c) and recompose(T, n, c) == x
            rep.record(f"recompose level {n}", ok, None if ok else (x,))
            if not ok:
                break
    return rep


# ---------------------------------------------------------------- homotopy

@dataclass
class HomotopyGroup:
    moore_index: int       # the numbering used with pi_1 = NG_0 / d_1 NG_1
    topological_index: int
    group: FiniteGroup
    cycles: Subgroup
    boundaries: Subgroup
    relative: bool = False  # top level computed without the next boundary


def homotopy_groups(T: TruncatedSimplicialGroup, certified_length: Optional[int] = None):
    """Moore homology in each degree.

    Degree n gives (ker d_n on NG_n) / d_{n+1}(NG_{n+1}), labelled pi_{n+1}
    in the Moore numbering and pi_n topologically.  At the top level k the
    quotient is by the trivial group and flagged relative unless the caller
    certifies the Moore length is below k+1.
    """
    mc = T.moore()
    out = []
    for n in range(T.k + 1):
        G = T.levels[n]
        if n == 0:
            cyc = mc.terms[0]
        else:
            cyc = Subgroup(G, [x for x in mc.terms[n].members
                               if T.faces[n][n][x] == T.levels[n - 1].identity])
        relative = False
        if n < T.k:
            bnd = Subgroup(G, [int(T.faces[n + 1][n + 1][y]) for y in mc.terms[n + 1].members])
        else:
            bnd = trivial_subgroup(G)
            relative = certified_length is None or certified_length > T.k
        C, emb = cyc.as_group()
        pos = {m: i for i, m in enumerate(emb.image.tolist())}
        B = Subgroup(C, [pos[b] for b in bnd.members])
        Q, _, _ = quotient(C, B)
        out.append(HomotopyGroup(n + 1, n, Q, cyc, bnd, relative))
    return out


# ---------------------------------------------------------------- generic builders

def constant_simplicial(G: FiniteGroup, k: int = 4) -> TruncatedSimplicialGroup:
    ident = np.arange(G.order)
    faces = [[ident] * (n + 1) for n in range(1, k + 1)]
    degens = [[ident] * (n + 1) for n in range(k)]
    return TruncatedSimplicialGroup([G] * (k + 1), faces, degens, f"const({G.name})")


def simplicial_kernel(T: TruncatedSimplicialGroup, limit: int = 200000):
    """Level k+1 of the coskeleton: compatible (k+2)-tuples of G_k.

    Returns (group, faces, degeneracies from level k); elements are stored
    as tuples and indexed in discovery order.
    """
    k = T.k
    G = T.levels[k]
    d = T.faces[k]
    prev_id = T.levels[k - 1].identity if k >= 1 else None
    # index G_k by its faces for the backtracking search
    by_face = {}
    for x in G.elements():
        for i in range(k + 1):
            by_face.setdefault((i, int(d[i][x])), []).append(x)
    tuples = []

    def search(prefix):
        j = len(prefix)
        if j == k + 2:
            tuples.append(tuple(prefix))
            if len(tuples) > limit:
                raise GroupError("OrderCapExceeded", f"simplicial kernel exceeds {limit}")
            return
        # need d_i x_j = d_{j-1} x_i for i < j
        if j == 0:
            cands = G.elements()
        else:
            cands = by_face.get((0, int(d[j - 1][prefix[0]])), [])
        for x in cands:
            if all(d[i][x] == d[j - 1][prefix[i]] for i in range(1, j)):
                search(prefix + [x])

    search([])
    return _tuple_group(T, tuples)


def _tuple_group(T: TruncatedSimplicialGroup, tuples):
    """Group of compatible tuples under componentwise product, with maps."""
    k = T.k
    G = T.levels[k]
    index = {t: i for i, t in enumerate(tuples)}
    n = len(tuples)
    arr = np.array(tuples, dtype=np.int64)
    ident = index[tuple([G.identity] * (k + 2))]
    if n <= 4096 and G.materialized:
        table = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            prods = G.table[arr[a][None, :], arr]
            table[a] = [index[tuple(r)] for r in prods.tolist()]
        H = FiniteGroup(table, ident, None, f"cosk{k + 1}")
    else:
        from .groups import LazyGroup

        def mul(a, b):
            return index[tuple(G.mul(int(x), int(y)) for x, y in zip(arr[a], arr[b]))]

        def inv(a):
            return index[tuple(G.inv(int(x)) for x in arr[a])]

        H = LazyGroup(n, mul, inv, ident, None, f"cosk{k + 1}")
    faces = [arr[:, i].copy() for i in range(k + 2)]
    degens = []
    for j in range(k + 1):
        img = np.empty(G.order, dtype=np.int64)
        for x in G.elements():
            img[x] = index[_cosk_degeneracy(T, j, x)]
        degens.append(img)
    return H, faces, degens, arr


def _cosk_degeneracy(T, j, x):
    """(d_0 s_j x, ..., d_{k+1} s_j x) computed from the simplicial identities."""
    k = T.k
    out = []
    for i in range(k + 2):
        if i < j:
            out.append(int(T.degens[k - 1][j - 1][T.faces[k][i][x]]))
        elif i == j or i == j + 1:
            out.append(int(x))
        else:
            out.append(int(T.degens[k - 1][j][T.faces[k][i - 1][x]]))
    return tuple(out)


def extend_by_coskeleton(T: TruncatedSimplicialGroup, limit: int = 200000) -> TruncatedSimplicialGroup:
    H, faces, degens, _ = simplicial_kernel(T, limit)
    return TruncatedSimplicialGroup(T.levels + [H], T.faces[1:] + [faces], T.degens + [degens],
                                    T.name + "+cosk")


def extend_degenerate(T: TruncatedSimplicialGroup, limit: int = 400000) -> TruncatedSimplicialGroup:
    """Add level k+1 generated by degeneracies inside the simplicial kernel.

    For a simplicial group of Moore length <= k this is its true level k+1
    (the map to the simplicial kernel is injective there), and the new
    Moore term is trivial.
    """
    k = T.k
    G = T.levels[k]
    gens = []
    for j in range(k + 1):
        for g in generating_set(G):
            gens.append(_cosk_degeneracy(T, j, g))
    ident = tuple([G.identity] * (k + 2))
    seen = {ident: 0}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for t in frontier:
            for g in gens:
                u = tuple(G.mul(a, b) for a, b in zip(t, g))
                if u not in seen:
                    seen[u] = len(order)
                    order.append(u)
                    nxt.append(u)
                    if len(order) > limit:
                        raise GroupError("OrderCapExceeded", f"degenerate level exceeds {limit}")
        frontier = nxt
    H, faces, degens, _ = _tuple_group(T, order)
    return TruncatedSimplicialGroup(T.levels + [H], T.faces[1:] + [faces], T.degens + [degens],
                                    T.name + "+deg")
