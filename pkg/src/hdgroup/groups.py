"""Finite groups on indexed elements 0..n-1.

Two flavours share one interface: `FiniteGroup` holds a Cayley table,
`LazyGroup` computes products on demand and is used above the
materialization cap.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

MATERIALIZE_CAP = 4096
CHUNK_ROWS = 256
ISO_CAP = 4096


class GroupError(ValueError):
    """Raised when data fails a group-theoretic precondition."""

    def __init__(self, kind: str, message: str, witness=None):
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.witness = witness


class FiniteGroup:
    """Group given by a materialized Cayley table."""

    materialized = True

    def __init__(self, table, identity: int = 0, labels: Optional[Sequence[str]] = None,
                 name: str = "", label_fn: Optional[Callable[[int], str]] = None):
        self._label_fn = label_fn
        self.table = np.ascontiguousarray(table, dtype=np.int64)
        self.order = int(self.table.shape[0])
        self.identity = int(identity)
        self.name = name
        self._labels = list(labels) if labels is not None else None
        inv = np.empty(self.order, dtype=np.int64)
        rows, cols = np.nonzero(self.table == self.identity)
        inv[rows] = cols
        self.inverse = inv
        self._abelian = None

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        if self._labels is not None:
            return self._labels[a]
        if self._label_fn is not None:
            return self._label_fn(a)
        return str(a)

    @property
    def labels(self) -> list:
        return [self.label(a) for a in range(self.order)]

    def prod(self, *xs: int) -> int:
        r = self.identity
        for x in xs:
            r = self.mul(r, x)
        return r

    def conj(self, a: int, x: int) -> int:
        """a x a^-1"""
        return self.mul(self.mul(a, x), self.inv(a))

    def comm(self, a: int, b: int) -> int:
        """[a, b] = a b a^-1 b^-1"""
        return self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))

    def power(self, a: int, k: int) -> int:
        r = self.identity
        for _ in range(k):
            r = self.mul(r, a)
        return r

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def is_abelian(self) -> bool:
        if self._abelian is None:
            if self.materialized:
                self._abelian = bool(np.array_equal(self.table, self.table.T))
            else:
                gens = generating_set(self)
                self._abelian = all(self.mul(a, b) == self.mul(b, a)
                                    for a in gens for b in gens)
        return self._abelian

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self) -> str:
        tag = self.name or "G"
        return f"<{type(self).__name__} {tag} order={self.order}>"


class LazyGroup(FiniteGroup):
    """Group whose product is computed on demand."""

    materialized = False

    def __init__(self, order: int, mul: Callable[[int, int], int], inv: Callable[[int], int],
                 identity: int = 0, label: Optional[Callable[[int], str]] = None,
                 name: str = ""):
        self.order = int(order)
        self.identity = int(identity)
        self.name = name
        self._mul = mul
        self._inv = inv
        self._label = label
        self._labels = None
        self._abelian = None

    def mul(self, a: int, b: int) -> int:
        return self._mul(a, b)

    def inv(self, a: int) -> int:
        return self._inv(a)

    def label(self, a: int) -> str:
        return self._label(a) if self._label else str(a)

    def materialize(self) -> FiniteGroup:
        n = self.order
        table = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            for b in range(n):
                table[a, b] = self._mul(a, b)
        return FiniteGroup(table, self.identity, [self.label(a) for a in range(n)], self.name)


# ---------------------------------------------------------------- construction

def group_from_table(labels: Optional[Sequence[str]], identity: int, table,
                     name: str = "") -> FiniteGroup:
    """Validate a Cayley table and return the group.

    Raises GroupError with kind BadTableShape, NoIdentity, NoInverse or
    NotAssociative, carrying a witness.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise GroupError("BadTableShape", f"table must be square and non-empty, got {t.shape}")
    n = t.shape[0]
    if not np.issubdtype(t.dtype, np.integer):
        raise GroupError("BadTableShape", "table entries must be integers")
    bad = np.argwhere((t < 0) | (t >= n))
    if len(bad):
        i, j = (int(v) for v in bad[0])
        raise GroupError("BadTableShape", f"entry [{i}][{j}]={int(t[i, j])} out of range", (i, j))
    if labels is not None and (len(labels) != n or len(set(labels)) != n):
        raise GroupError("BadTableShape", "labels must be n distinct strings")
    e = int(identity)
    if not 0 <= e < n:
        raise GroupError("NoIdentity", f"identity index {e} out of range", e)
    ar = np.arange(n)
    for a in range(n):
        if t[e, a] != a or t[a, e] != a:
            raise GroupError("NoIdentity", f"{e} is not a two-sided identity (fails at {a})", a)
    for a in range(n):
        right = np.nonzero(t[a] == e)[0]
        left = np.nonzero(t[:, a] == e)[0]
        if len(right) == 0 or len(left) == 0 or right[0] != left[0]:
            raise GroupError("NoInverse", f"element {a} has no two-sided inverse", a)
    w = associativity_witness(t, ar)
    if w is not None:
        raise GroupError("NotAssociative", f"(ab)c != a(bc) at {w}", w)
    return FiniteGroup(t.astype(np.int64), e, labels, name)


def associativity_witness(t: np.ndarray, elems=None):
    """Return a failing triple or None.

    Small tables are checked on all triples.  Larger ones use Light's test
    along a generating set, which is equivalent for tables that already
    have an identity and inverses.
    """
    n = t.shape[0]
    if n <= 128:
        lhs = t[t[:, :, None], np.arange(n)[None, None, :]]
        rhs = t[np.arange(n)[:, None, None], t[None, :, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            return tuple(int(v) for v in bad[0])
        return None
    # Light's test: x(gy) == (xg)y for generators g suffices once closure under
    # the generated set holds; generators are taken greedily from the table.
    gens = _greedy_generators_table(t)
    for g in gens:
        lhs = t[t[:, g][:, None], np.arange(n)[None, :]]
        rhs = t[np.arange(n)[:, None], t[g][None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            x, y = (int(v) for v in bad[0])
            return (x, int(g), y)
    return None


def _greedy_generators_table(t: np.ndarray) -> list:
    n = t.shape[0]
    e = int(np.nonzero(np.all(t == np.arange(n)[None, :], axis=1))[0][0])
    reached = {e}
    gens = []
    for cand in range(n):
        if cand in reached:
            continue
        gens.append(cand)
        frontier = list(reached)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(t[x, g])
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(reached) == n:
            break
    return gens


def cyclic(n: int) -> FiniteGroup:
    a = np.arange(n)
    return FiniteGroup((a[:, None] + a[None, :]) % n, 0, [f"a{i}" for i in range(n)], f"C{n}")


def trivial_group() -> FiniteGroup:
    return FiniteGroup(np.zeros((1, 1), dtype=np.int64), 0, ["e"], "1")


def from_permutations(perms: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Group of the given distinct permutations, composed as (p*q)(i) = p[q[i]]."""
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    if len(index) != len(perms):
        raise GroupError("BadTableShape", "permutations must be distinct")
    n = len(perms)
    table = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            r = tuple(p[k] for k in q)
            if r not in index:
                raise GroupError("NotClosed", f"product of {i} and {j} leaves the set", (i, j))
            table[i, j] = index[r]
    ident = tuple(range(len(perms[0])))
    labels = ["".join(map(str, p)) for p in perms]
    return group_from_table(labels, index[ident], table, name)


def symmetric(k: int) -> FiniteGroup:
    return from_permutations(sorted(itertools.permutations(range(k))), f"S{k}")


def alternating(k: int) -> FiniteGroup:
    def even(p):
        s, seen = 0, set()
        for i in range(len(p)):
            j, c = i, 0
            while j not in seen:
                seen.add(j)
                j = p[j]
                c += 1
            if c:
                s += c - 1
        return s % 2 == 0
    return from_permutations([p for p in sorted(itertools.permutations(range(k))) if even(p)],
                             f"A{k}")


def dihedral(m: int) -> FiniteGroup:
    """Dihedral group of order 2m acting on m points."""
    rots = [tuple((i + r) % m for i in range(m)) for r in range(m)]
    refl = [tuple((r - i) % m for i in range(m)) for r in range(m)]
    return from_permutations(rots + refl, f"D{2 * m}")


def quaternion() -> FiniteGroup:
    # elements (sign, unit) with unit in 1,i,j,k
    units = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
             ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
             ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
             ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1")}
    elems = [(s, u) for s in (1, -1) for u in "1ijk"]
    idx = {x: i for i, x in enumerate(elems)}
    table = np.empty((8, 8), dtype=np.int64)
    for (s1, u1), i in idx.items():
        for (s2, u2), j in idx.items():
            s, u = units[(u1, u2)]
            table[i, j] = idx[(s1 * s2 * s, u)]
    labels = [("" if s == 1 else "-") + u for s, u in elems]
    return group_from_table(labels, 0, table, "Q8")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with element (g, h) at index g*|H| + h."""
    return semidirect(trivial_action(H, G))


# ---------------------------------------------------------------- maps

class Homomorphism:
    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup, image, check: bool = True,
                 name: str = ""):
        self.domain = domain
        self.codomain = codomain
        self.image = np.ascontiguousarray(image, dtype=np.int64)
        self.name = name
        if self.image.shape != (domain.order,):
            raise GroupError("BadTableShape",
                             f"map {name} needs {domain.order} entries, got {self.image.shape}")
        if check:
            w = self.witness()
            if w is not None:
                raise GroupError("NotHomomorphism", f"{name} fails at {w}", w)

    def __call__(self, x: int) -> int:
        return int(self.image[x])

    def witness(self):
        """First pair (a, b) with f(ab) != f(a)f(b), or None."""
        D, C, f = self.domain, self.codomain, self.image
        if np.any((f < 0) | (f >= C.order)):
            return ("range",)
        if f[D.identity] != C.identity:
            return (D.identity,)
        if D.materialized and C.materialized:
            for lo in range(0, D.order, CHUNK_ROWS):
                rows = slice(lo, min(lo + CHUNK_ROWS, D.order))
                lhs = f[D.table[rows]]
                rhs = C.table[f[rows, None], f[None, :]]
                bad = np.argwhere(lhs != rhs)
                if len(bad):
                    return (int(bad[0][0]) + lo, int(bad[0][1]))
            return None
        gens = generating_set(D)
        for a in D.elements():
            for b in gens:
                if f[D.mul(a, b)] != C.mul(int(f[a]), int(f[b])):
                    return (a, b)
        return None

    def compose(self, other: "Homomorphism") -> "Homomorphism":
        """self after other."""
        return Homomorphism(other.domain, self.codomain, self.image[other.image], check=False)

    def is_trivial(self) -> bool:
        return bool(np.all(self.image == self.codomain.identity))


def identity_map(G: FiniteGroup) -> Homomorphism:
    return Homomorphism(G, G, np.arange(G.order), check=False)


def trivial_map(G: FiniteGroup, H: FiniteGroup) -> Homomorphism:
    return Homomorphism(G, H, np.full(G.order, H.identity), check=False)


class GroupAction:
    """Left action of `actor` on `target` by automorphisms: act[a, x] = ^a x."""

    def __init__(self, actor: FiniteGroup, target: FiniteGroup, act, check: bool = True,
                 name: str = ""):
        self.actor = actor
        self.target = target
        self.table = np.ascontiguousarray(act, dtype=np.int64)
        self.name = name
        if self.table.shape != (actor.order, target.order):
            raise GroupError("BadTableShape",
                             f"action {name} needs shape {(actor.order, target.order)}, "
                             f"got {self.table.shape}")
        if check:
            w = self.witness()
            if w is not None:
                raise GroupError("NotAnAction", f"{name} fails {w[0]} at {w[1:]}", w)

    def __call__(self, a: int, x: int) -> int:
        return int(self.table[a, x])

    def witness(self):
        A, T, t = self.actor, self.target, self.table
        if np.any((t < 0) | (t >= T.order)):
            return ("range",)
        e = A.identity
        bad = np.nonzero(t[e] != np.arange(T.order))[0]
        if len(bad):
            return ("unit", e, int(bad[0]))
        for a in generating_set(A) if not A.materialized else A.elements():
            row = t[a]
            if np.any(np.sort(row) != np.arange(T.order)):
                return ("bijective", a)
            if T.materialized:
                bad = np.argwhere(row[T.table] != T.table[row[:, None], row[None, :]])
                if len(bad):
                    return ("automorphism", a, int(bad[0][0]), int(bad[0][1]))
            else:
                for x in T.elements():
                    for y in generating_set(T):
                        if row[T.mul(x, y)] != T.mul(int(row[x]), int(row[y])):
                            return ("automorphism", a, x, y)
        # rows are automorphisms, so composition on generators b suffices
        for b in generating_set(A):
            if A.materialized:
                bad = np.argwhere(t[A.table[:, b]] != t[:, t[b]])
                if len(bad):
                    a, x = (int(v) for v in bad[0])
                    return ("composition", a, b, x)
            else:
                for a in A.elements():
                    if np.any(t[A.mul(a, b)] != t[a][t[b]]):
                        return ("composition", a, b)
        return None


def trivial_action(actor: FiniteGroup, target: FiniteGroup) -> GroupAction:
    return GroupAction(actor, target, np.tile(np.arange(target.order), (actor.order, 1)),
                       check=False)


def conjugation_action(G: FiniteGroup, sub: "Subgroup" = None) -> GroupAction:
    """G acting on itself (or on a normal subgroup, reindexed) by conjugation."""
    if sub is None:
        n = G.order
        t = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            t[a] = G.table[G.table[a], G.inverse[a]]
        return GroupAction(G, G, t, check=False)
    H, emb = sub.as_group()
    pos = {int(m): i for i, m in enumerate(emb.image)}
    t = np.empty((G.order, H.order), dtype=np.int64)
    for a in range(G.order):
        for i, m in enumerate(emb.image):
            c = G.conj(a, int(m))
            if c not in pos:
                raise GroupError("NotNormal",
                                 f"conjugating {G.label(int(m))} by {G.label(a)} leaves the subgroup",
                                 (a, int(m)))
            t[a, i] = pos[c]
    return GroupAction(G, H, t, check=False)


def pullback_action(act: GroupAction, f: Homomorphism) -> GroupAction:
    """Action of f.domain given by a -> act(f(a))."""
    return GroupAction(f.domain, act.target, act.table[f.image], check=False)


# ---------------------------------------------------------------- subgroups

class Subgroup:
    def __init__(self, parent: FiniteGroup, members: Iterable[int]):
        self.parent = parent
        self.members = tuple(sorted(int(m) for m in set(members)))
        self._set = frozenset(self.members)
        self._group = None

    def __contains__(self, x) -> bool:
        return int(x) in self._set

    def __len__(self) -> int:
        return len(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self._set == other._set

    def __hash__(self):
        return hash(self._set)

    def issubset(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def is_normal(self) -> bool:
        return normality_witness(self.parent, self) is None

    def as_group(self):
        """(H, inclusion) with H indexed by the sorted member list."""
        if self._group is None:
            G = self.parent
            mem = np.array(self.members, dtype=np.int64)
            pos = {m: i for i, m in enumerate(self.members)}
            n = len(mem)
            if G.materialized:
                lookup = np.full(G.order, -1, dtype=np.int64)
                lookup[mem] = np.arange(n)
                table = lookup[G.table[mem[:, None], mem[None, :]]]
            else:
                table = np.empty((n, n), dtype=np.int64)
                for i, a in enumerate(self.members):
                    for j, b in enumerate(self.members):
                        table[i, j] = pos[G.mul(a, b)]
            H = FiniteGroup(table, pos[G.identity], [G.label(m) for m in self.members])
            self._group = (H, Homomorphism(H, G, mem, check=False))
        return self._group

    def index_of(self, x: int) -> int:
        """Position of parent element x within the sorted members."""
        return self.members.index(int(x))


def whole(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, range(G.order))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, [G.identity])


def subgroup_closure(G: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    gens = [int(g) for g in generators if int(g) != G.identity]
    reached = {G.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = G.mul(x, g)
            if y not in reached:
                reached.add(y)
                queue.append(y)
    return Subgroup(G, reached)


def normal_closure(G: FiniteGroup, seed: Iterable[int], within: Optional[Subgroup] = None) -> Subgroup:
    """Smallest subgroup containing seed and stable under conjugation by `within` (default G)."""
    conj_by = generating_set(G) if within is None else _subgroup_gens(within)
    closed = set(int(s) for s in seed)
    frontier = list(closed)
    while frontier:
        nxt = []
        for x in frontier:
            for g in conj_by:
                for y in (G.conj(g, x), G.conj(G.inv(g), x)):
                    if y not in closed:
                        closed.add(y)
                        nxt.append(y)
        frontier = nxt
    H = subgroup_closure(G, closed)
    # a subgroup generated by a conjugation-stable set is normal
    return H


def _subgroup_gens(S: Subgroup) -> list:
    G = S.parent
    gens, reached = [], Subgroup(G, [G.identity])
    for m in S.members:
        if m not in reached:
            gens.append(m)
            reached = subgroup_closure(G, gens)
            if reached.order == S.order:
                break
    return gens


def generating_set(G: FiniteGroup) -> list:
    """A small generating set, chosen greedily by index."""
    cached = getattr(G, "_gens", None)
    if cached is not None:
        return cached
    gens = []
    reached = {G.identity}
    order = G.order
    for cand in range(order):
        if cand in reached:
            continue
        gens.append(cand)
        reached = set(subgroup_closure(G, gens).members)
        if len(reached) == order:
            break
    G._gens = gens
    return gens


def normality_witness(G: FiniteGroup, N: Subgroup):
    for g in generating_set(G):
        for x in N.members:
            if G.conj(g, x) not in N:
                return (g, x)
    return None


def subgroup_product(G: FiniteGroup, subs: Sequence[Subgroup]) -> Subgroup:
    gens = []
    for s in subs:
        gens.extend(_subgroup_gens(s))
    return subgroup_closure(G, gens)


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    return Subgroup(A.parent, A._set & B._set)


def quotient(G: FiniteGroup, N: Subgroup):
    """G/N on minimal coset representatives, with the projection."""
    w = normality_witness(G, N)
    if w is not None:
        raise GroupError("NotNormal", f"{G.label(w[0])} conjugates {G.label(w[1])} out of N", w)
    rep_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for x in range(G.order):
        if rep_of[x] >= 0:
            continue
        reps.append(x)
        for m in N.members:
            rep_of[G.mul(x, m)] = x
    pos = {r: i for i, r in enumerate(reps)}
    proj = np.array([pos[int(rep_of[x])] for x in range(G.order)], dtype=np.int64)
    k = len(reps)
    table = np.empty((k, k), dtype=np.int64)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            table[i, j] = proj[G.mul(a, b)]
    Q = FiniteGroup(table, int(proj[G.identity]), [G.label(r) + "N" for r in reps])
    return Q, Homomorphism(G, Q, proj, check=False), reps


def kernel_image(f: Homomorphism):
    ker = Subgroup(f.domain, np.nonzero(f.image == f.codomain.identity)[0])
    img = Subgroup(f.codomain, np.unique(f.image))
    return ker, img


def image_of(f: Homomorphism, S: Subgroup) -> Subgroup:
    return Subgroup(f.codomain, [int(f.image[m]) for m in S.members])


# ---------------------------------------------------------------- products

def semidirect(act: GroupAction, name: str = "") -> FiniteGroup:
    """target x| actor, element (x, a) at index x + |target| * a.

    (x, a)(y, b) = (x . ^a y, ab).  Materialized when the order is within
    MATERIALIZE_CAP, lazy otherwise.
    """
    T, A, t = act.target, act.actor, act.table
    nt, na = T.order, A.order
    order = nt * na

    def label(i):
        return f"({T.label(i % nt)},{A.label(i // nt)})"

    if order <= MATERIALIZE_CAP and T.materialized and A.materialized:
        x = np.arange(order) % nt
        a = np.arange(order) // nt
        table = np.empty((order, order), dtype=np.int64)
        for lo in range(0, order, CHUNK_ROWS):
            r = slice(lo, min(lo + CHUNK_ROWS, order))
            first = T.table[x[r, None], t[a[r, None], x[None, :]]]
            table[r] = first + nt * A.table[a[r, None], a[None, :]]
        ident = T.identity + nt * A.identity
        return FiniteGroup(table, ident, None, name, label_fn=label)

    def mul(i, j):
        x, a = i % nt, i // nt
        y, b = j % nt, j // nt
        return T.mul(x, int(t[a, y])) + nt * A.mul(a, b)

    def inv(i):
        x, a = i % nt, i // nt
        ai = A.inv(a)
        return int(t[ai, T.inv(x)]) + nt * ai

    return LazyGroup(order, mul, inv, T.identity + nt * A.identity, label, name)


def commutator_subgroup_of(G: FiniteGroup, A: Subgroup, B: Subgroup) -> Subgroup:
    """[A, B]: normal closure in <A u B> of the commutators aba^-1b^-1."""
    seeds = {G.comm(a, b) for a in A.members for b in B.members}
    within = subgroup_product(G, [A, B])
    return normal_closure(G, seeds, within=within)


# ---------------------------------------------------------------- isomorphism

def is_isomorphic_small(G: FiniteGroup, H: FiniteGroup, cap: int = ISO_CAP) -> Optional[Homomorphism]:
    """Search for an isomorphism G -> H by backtracking on generator images."""
    if G.order != H.order:
        return None
    if G.order > cap:
        raise GroupError("OrderCapExceeded", f"order {G.order} exceeds cap {cap}")
    if sorted(G.element_order(a) for a in G.elements()) != \
            sorted(H.element_order(b) for b in H.elements()):
        return None
    if G.is_abelian() != H.is_abelian():
        return None
    gens = generating_set(G)
    gorders = [G.element_order(g) for g in gens]
    horder = [H.element_order(b) for b in H.elements()]
    cands = [[b for b in H.elements() if horder[b] == o] for o in gorders]

    # words: BFS spanning tree of G over gens
    parent = {G.identity: None}
    order_list = [G.identity]
    q = deque([G.identity])
    while q:
        x = q.popleft()
        for gi, g in enumerate(gens):
            y = G.mul(x, g)
            if y not in parent:
                parent[y] = (x, gi)
                order_list.append(y)
                q.append(y)

    def extend(images):
        f = np.full(G.order, -1, dtype=np.int64)
        f[G.identity] = H.identity
        for y in order_list[1:]:
            x, gi = parent[y]
            f[y] = H.mul(int(f[x]), images[gi])
        if len(set(f.tolist())) != G.order:
            return None
        for x in G.elements():
            for gi, g in enumerate(gens):
                if f[G.mul(x, g)] != H.mul(int(f[x]), images[gi]):
                    return None
        return f

    def search(i, images):
        if i == len(gens):
            return extend(images)
        for b in cands[i]:
            # cheap pruning: the partial image must generate a subgroup of the right size
            r = search(i + 1, images + [b])
            if r is not None:
                return r
        return None

    f = search(0, [])
    if f is None:
        return None
    return Homomorphism(G, H, f, check=False)
